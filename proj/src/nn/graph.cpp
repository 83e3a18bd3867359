#include "blescope/nn/graph.hpp"

#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::nn {

namespace {

std::string pname(const std::string& prefix, std::size_t layer, const char* what) {
  return prefix + "l" + std::to_string(layer) + "." + what;
}

void fill_uniform(Tensor& t, double bound, Rng& rng) {
  for (double& v : t.data) v = rng.uniform(-bound, bound);
}

Mat sigmoid(const Mat& x) { return ((-x.array()).exp() + 1.0).inverse().matrix(); }

void check(bool ok, std::size_t layer, LayerKind kind, const std::string& msg) {
  if (!ok)
    throw Error("layer " + std::to_string(layer) + " (" + layer_kind_name(kind) + "): " + msg);
}

}  // namespace

std::string layer_kind_name(LayerKind k) {
  switch (k) {
    case LayerKind::kDense: return "dense";
    case LayerKind::kLstm: return "lstm";
    case LayerKind::kConv1d: return "conv1d";
    case LayerKind::kRelu: return "relu";
    case LayerKind::kTakeLast: return "take_last";
    case LayerKind::kSkipRelu: return "skip_relu";
  }
  return "?";
}

void init_graph_params(const Graph& g, ModelParams& params, Rng& rng,
                       const std::string& prefix) {
  for (std::size_t li = 0; li < g.size(); ++li) {
    const LayerSpec& s = g[li];
    switch (s.kind) {
      case LayerKind::kDense: {
        check(s.in_dim > 0 && s.out_dim > 0, li, s.kind, "positive dimensions required");
        Tensor& w = params.add(pname(prefix, li, "w"),
                               {static_cast<std::size_t>(s.out_dim),
                                static_cast<std::size_t>(s.in_dim)});
        fill_uniform(w, std::sqrt(6.0 / (s.in_dim + s.out_dim)), rng);
        params.add(pname(prefix, li, "b"), {static_cast<std::size_t>(s.out_dim)});
        break;
      }
      case LayerKind::kLstm: {
        check(s.in_dim > 0 && s.out_dim > 0, li, s.kind, "positive dimensions required");
        const std::size_t h = static_cast<std::size_t>(s.out_dim);
        Tensor& wih = params.add(pname(prefix, li, "w_ih"),
                                 {4 * h, static_cast<std::size_t>(s.in_dim)});
        fill_uniform(wih, 1.0 / std::sqrt(static_cast<double>(s.in_dim)), rng);
        Tensor& whh = params.add(pname(prefix, li, "w_hh"), {4 * h, h});
        fill_uniform(whh, 1.0 / std::sqrt(static_cast<double>(s.out_dim)), rng);
        params.add(pname(prefix, li, "b"), {4 * h});
        break;
      }
      case LayerKind::kConv1d: {
        check(s.in_dim > 0 && s.out_dim > 0, li, s.kind, "positive dimensions required");
        check(s.kernel > 0 && s.kernel % 2 == 1, li, s.kind, "kernel must be odd");
        const int fan_in = s.in_dim * s.kernel;
        const int fan_out = s.out_dim * s.kernel;
        Tensor& w = params.add(pname(prefix, li, "w"),
                               {static_cast<std::size_t>(s.out_dim),
                                static_cast<std::size_t>(fan_in)});
        fill_uniform(w, std::sqrt(6.0 / (fan_in + fan_out)), rng);
        params.add(pname(prefix, li, "b"), {static_cast<std::size_t>(s.out_dim)});
        break;
      }
      case LayerKind::kRelu:
      case LayerKind::kTakeLast:
      case LayerKind::kSkipRelu:
        break;
    }
  }
}

Seq forward(const Graph& g, ModelParams& params, const Seq& input, Tape& tape,
            const std::string& prefix) {
  if (input.empty()) throw Error("forward: empty input sequence");
  const Eigen::Index batch = input[0].cols();
  for (const Mat& m : input)
    if (m.cols() != batch) throw Error("forward: ragged batch dimension in input");

  tape.graph = &g;
  tape.params = &params;
  tape.prefix = prefix;
  tape.input = input;
  tape.ctx.assign(g.size(), LayerContext{});

  Seq x = input;
  for (std::size_t li = 0; li < g.size(); ++li) {
    const LayerSpec& s = g[li];
    LayerContext& ctx = tape.ctx[li];
    switch (s.kind) {
      case LayerKind::kDense: {
        check(x[0].rows() == s.in_dim, li, s.kind,
              "expected " + std::to_string(s.in_dim) + " input features, got " +
                  std::to_string(x[0].rows()));
        const auto w = params.at(pname(prefix, li, "w")).mat();
        const auto b = params.at(pname(prefix, li, "b")).mat();
        ctx.input = x;
        Seq y(x.size());
        for (std::size_t t = 0; t < x.size(); ++t)
          y[t] = (w * x[t]).colwise() + b.col(0);
        x = std::move(y);
        break;
      }
      case LayerKind::kLstm: {
        check(x[0].rows() == s.in_dim, li, s.kind,
              "expected " + std::to_string(s.in_dim) + " input features, got " +
                  std::to_string(x[0].rows()));
        const auto wih = params.at(pname(prefix, li, "w_ih")).mat();
        const auto whh = params.at(pname(prefix, li, "w_hh")).mat();
        const auto b = params.at(pname(prefix, li, "b")).mat();
        const Eigen::Index h = s.out_dim;
        ctx.input = x;
        const std::size_t steps = x.size();
        ctx.gate_i.resize(steps);
        ctx.gate_f.resize(steps);
        ctx.gate_g.resize(steps);
        ctx.gate_o.resize(steps);
        ctx.cell.resize(steps);
        ctx.cell_tanh.resize(steps);
        Seq y(steps);
        Mat h_prev = Mat::Zero(h, batch);
        Mat c_prev = Mat::Zero(h, batch);
        for (std::size_t t = 0; t < steps; ++t) {
          Mat z = (wih * x[t] + whh * h_prev).colwise() + b.col(0);
          ctx.gate_i[t] = sigmoid(z.topRows(h));
          ctx.gate_f[t] = sigmoid(z.middleRows(h, h));
          ctx.gate_g[t] = z.middleRows(2 * h, h).array().tanh().matrix();
          ctx.gate_o[t] = sigmoid(z.bottomRows(h));
          ctx.cell[t] = ctx.gate_f[t].cwiseProduct(c_prev) +
                        ctx.gate_i[t].cwiseProduct(ctx.gate_g[t]);
          ctx.cell_tanh[t] = ctx.cell[t].array().tanh().matrix();
          y[t] = ctx.gate_o[t].cwiseProduct(ctx.cell_tanh[t]);
          h_prev = y[t];
          c_prev = ctx.cell[t];
        }
        ctx.output = y;
        x = std::move(y);
        break;
      }
      case LayerKind::kConv1d: {
        check(x[0].rows() == s.in_dim, li, s.kind,
              "expected " + std::to_string(s.in_dim) + " input channels, got " +
                  std::to_string(x[0].rows()));
        const auto w = params.at(pname(prefix, li, "w")).mat();
        const auto b = params.at(pname(prefix, li, "b")).mat();
        const int pad = (s.kernel - 1) / 2;
        const int len = static_cast<int>(x.size());
        ctx.input = x;
        Seq y(x.size());
        for (int t = 0; t < len; ++t) {
          Mat patch = Mat::Zero(static_cast<Eigen::Index>(s.in_dim) * s.kernel, batch);
          for (int k = 0; k < s.kernel; ++k) {
            const int src = t + k - pad;
            if (src >= 0 && src < len)
              patch.middleRows(static_cast<Eigen::Index>(k) * s.in_dim, s.in_dim) = x[src];
          }
          y[t] = (w * patch).colwise() + b.col(0);
        }
        x = std::move(y);
        break;
      }
      case LayerKind::kRelu: {
        ctx.input = x;  // pre-activations (tests probe kink distance)
        Seq y(x.size());
        for (std::size_t t = 0; t < x.size(); ++t) y[t] = x[t].cwiseMax(0.0);
        ctx.output = y;
        x = std::move(y);
        break;
      }
      case LayerKind::kTakeLast: {
        ctx.input = x;
        x = Seq{x.back()};
        break;
      }
      case LayerKind::kSkipRelu: {
        check(x.size() == input.size() && x[0].rows() == input[0].rows(), li, s.kind,
              "stack output shape must match graph input shape");
        Seq pre(x.size());
        Seq y(x.size());
        for (std::size_t t = 0; t < x.size(); ++t) {
          pre[t] = x[t] + input[t];
          y[t] = pre[t].cwiseMax(0.0);
        }
        ctx.input = std::move(pre);
        ctx.output = y;
        x = std::move(y);
        break;
      }
    }
  }
  return x;
}

Seq backward(Tape& tape, const Seq& output_grad) {
  if (tape.graph == nullptr) throw Error("backward: tape was not produced by forward");
  const Graph& g = *tape.graph;
  ModelParams& params = *tape.params;
  const std::string& prefix = tape.prefix;

  // Gradients flowing through skip connections land directly on the input.
  Seq input_extra(tape.input.size());
  for (std::size_t t = 0; t < tape.input.size(); ++t)
    input_extra[t] = Mat::Zero(tape.input[t].rows(), tape.input[t].cols());

  Seq grad = output_grad;
  for (std::size_t ri = g.size(); ri-- > 0;) {
    const LayerSpec& s = g[ri];
    LayerContext& ctx = tape.ctx[ri];
    switch (s.kind) {
      case LayerKind::kDense: {
        auto dw = params.at(pname(prefix, ri, "w")).grad_mat();
        auto db = params.at(pname(prefix, ri, "b")).grad_mat();
        const auto wm = params.at(pname(prefix, ri, "w")).mat();
        Seq gx(ctx.input.size());
        for (std::size_t t = 0; t < ctx.input.size(); ++t) {
          dw.noalias() += grad[t] * ctx.input[t].transpose();
          db.col(0).noalias() += grad[t].rowwise().sum();
          gx[t].noalias() = wm.transpose() * grad[t];
        }
        grad = std::move(gx);
        break;
      }
      case LayerKind::kLstm: {
        const auto wih = params.at(pname(prefix, ri, "w_ih")).mat();
        const auto whh = params.at(pname(prefix, ri, "w_hh")).mat();
        auto dwih = params.at(pname(prefix, ri, "w_ih")).grad_mat();
        auto dwhh = params.at(pname(prefix, ri, "w_hh")).grad_mat();
        auto db = params.at(pname(prefix, ri, "b")).grad_mat();
        const Eigen::Index h = s.out_dim;
        const std::size_t steps = ctx.input.size();
        const Eigen::Index batch = ctx.input[0].cols();
        Seq gx(steps);
        Mat dh_next = Mat::Zero(h, batch);
        Mat dc_next = Mat::Zero(h, batch);
        for (std::size_t t = steps; t-- > 0;) {
          const Mat& i = ctx.gate_i[t];
          const Mat& f = ctx.gate_f[t];
          const Mat& gg = ctx.gate_g[t];
          const Mat& o = ctx.gate_o[t];
          const Mat& tc = ctx.cell_tanh[t];
          const Mat c_prev = t == 0 ? Mat::Zero(h, batch) : ctx.cell[t - 1];
          const Mat h_prev = t == 0 ? Mat::Zero(h, batch) : ctx.output[t - 1];

          Mat dh = grad[t] + dh_next;
          Mat do_ = dh.cwiseProduct(tc);
          Mat dc = dh.cwiseProduct(o).cwiseProduct(
                       (1.0 - tc.array().square()).matrix()) +
                   dc_next;
          Mat dz(4 * h, batch);
          dz.topRows(h) = dc.cwiseProduct(gg).cwiseProduct(i).cwiseProduct(
              (1.0 - i.array()).matrix());
          dz.middleRows(h, h) = dc.cwiseProduct(c_prev).cwiseProduct(f).cwiseProduct(
              (1.0 - f.array()).matrix());
          dz.middleRows(2 * h, h) =
              dc.cwiseProduct(i).cwiseProduct((1.0 - gg.array().square()).matrix());
          dz.bottomRows(h) =
              do_.cwiseProduct(o).cwiseProduct((1.0 - o.array()).matrix());

          dwih.noalias() += dz * ctx.input[t].transpose();
          dwhh.noalias() += dz * h_prev.transpose();
          db.col(0).noalias() += dz.rowwise().sum();
          gx[t].noalias() = wih.transpose() * dz;
          dh_next.noalias() = whh.transpose() * dz;
          dc_next = dc.cwiseProduct(f);
        }
        grad = std::move(gx);
        break;
      }
      case LayerKind::kConv1d: {
        const auto wm = params.at(pname(prefix, ri, "w")).mat();
        auto dw = params.at(pname(prefix, ri, "w")).grad_mat();
        auto db = params.at(pname(prefix, ri, "b")).grad_mat();
        const int pad = (s.kernel - 1) / 2;
        const int len = static_cast<int>(ctx.input.size());
        const Eigen::Index batch = ctx.input[0].cols();
        Seq gx(ctx.input.size());
        for (int t = 0; t < len; ++t) gx[t] = Mat::Zero(s.in_dim, batch);
        for (int t = 0; t < len; ++t) {
          Mat patch = Mat::Zero(static_cast<Eigen::Index>(s.in_dim) * s.kernel, batch);
          for (int k = 0; k < s.kernel; ++k) {
            const int src = t + k - pad;
            if (src >= 0 && src < len)
              patch.middleRows(static_cast<Eigen::Index>(k) * s.in_dim, s.in_dim) =
                  ctx.input[src];
          }
          dw.noalias() += grad[t] * patch.transpose();
          db.col(0).noalias() += grad[t].rowwise().sum();
          Mat dpatch = wm.transpose() * grad[t];
          for (int k = 0; k < s.kernel; ++k) {
            const int src = t + k - pad;
            if (src >= 0 && src < len)
              gx[src] += dpatch.middleRows(static_cast<Eigen::Index>(k) * s.in_dim, s.in_dim);
          }
        }
        grad = std::move(gx);
        break;
      }
      case LayerKind::kRelu: {
        for (std::size_t t = 0; t < grad.size(); ++t)
          grad[t] = grad[t].cwiseProduct(
              (ctx.output[t].array() > 0.0).cast<double>().matrix());
        break;
      }
      case LayerKind::kTakeLast: {
        Seq gx(ctx.input.size());
        for (std::size_t t = 0; t < ctx.input.size(); ++t)
          gx[t] = Mat::Zero(ctx.input[t].rows(), ctx.input[t].cols());
        gx.back() = grad[0];
        grad = std::move(gx);
        break;
      }
      case LayerKind::kSkipRelu: {
        for (std::size_t t = 0; t < grad.size(); ++t) {
          Mat dpre = grad[t].cwiseProduct(
              (ctx.output[t].array() > 0.0).cast<double>().matrix());
          input_extra[t] += dpre;
          grad[t] = std::move(dpre);
        }
        break;
      }
    }
  }

  for (std::size_t t = 0; t < grad.size(); ++t) grad[t] += input_extra[t];
  return grad;
}

}  // namespace blescope::nn
