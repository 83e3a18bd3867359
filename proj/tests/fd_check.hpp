// Central finite-difference gradient oracle shared by the unit tests and
// the acceptance suite. Independent of the reverse-mode path it checks.
#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

#include "blescope/nn/graph.hpp"

namespace fdcheck {

using blescope::nn::Graph;
using blescope::nn::LayerKind;
using blescope::nn::Mat;
using blescope::nn::ModelParams;
using blescope::nn::Rng;
using blescope::nn::Seq;
using blescope::nn::Tape;
using blescope::nn::Tensor;

// Error metric: |a - n| relative to the larger magnitude, with differences
// below the absolute floor treated as exact.
inline double scaled_err(double analytic, double numeric, double floor = 1e-5) {
  const double diff = std::abs(analytic - numeric);
  if (diff <= floor) return 0.0;
  return diff / std::max(std::abs(analytic), std::abs(numeric));
}

inline Seq random_seq(int rows, int cols, int len, Rng& rng, double lo, double hi) {
  Seq s(static_cast<std::size_t>(len));
  for (auto& m : s) {
    m = Mat(rows, cols);
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      for (Eigen::Index r = 0; r < m.rows(); ++r) m(r, c) = rng.uniform(lo, hi);
  }
  return s;
}

// Scalar probe loss: sum of projection * output.
inline double graph_loss(const Graph& g, ModelParams& p, const Seq& in, const Seq& proj) {
  Tape tape;
  const Seq out = blescope::nn::forward(g, p, in, tape);
  double s = 0.0;
  for (std::size_t t = 0; t < out.size(); ++t)
    s += (proj[t].array() * out[t].array()).sum();
  return s;
}

// Smallest |pre-activation| across every relu/skip_relu layer; finite
// differences are only trustworthy when this margin clears the step size.
inline double kink_margin(const Tape& tape) {
  double margin = std::numeric_limits<double>::infinity();
  for (std::size_t li = 0; li < tape.graph->size(); ++li) {
    const LayerKind k = (*tape.graph)[li].kind;
    if (k != LayerKind::kRelu && k != LayerKind::kSkipRelu) continue;
    for (const Mat& m : tape.ctx[li].input)
      margin = std::min(margin, m.array().abs().minCoeff());
  }
  return margin;
}

struct Result {
  double max_err = 0.0;
  double kink_margin = 0.0;
  int entries_checked = 0;
};

// Compares reverse-mode gradients of all parameters and the input against
// central differences of the probe loss.
inline Result check_graph(const Graph& g, ModelParams& params, Seq input, Rng& rng,
                          double eps = 1e-4) {
  Tape tape;
  const Seq out = blescope::nn::forward(g, params, input, tape);
  Seq proj(out.size());
  for (std::size_t t = 0; t < out.size(); ++t) {
    proj[t] = Mat(out[t].rows(), out[t].cols());
    for (Eigen::Index c = 0; c < proj[t].cols(); ++c)
      for (Eigen::Index r = 0; r < proj[t].rows(); ++r)
        proj[t](r, c) = rng.uniform(-1.0, 1.0);
  }

  Result res;
  res.kink_margin = kink_margin(tape);

  params.zero_grads();
  const Seq dinput = blescope::nn::backward(tape, proj);

  for (const std::string& name : params.names()) {
    Tensor& t = params.at(name);
    for (std::size_t i = 0; i < t.data.size(); ++i) {
      const double saved = t.data[i];
      t.data[i] = saved + eps;
      const double lp = graph_loss(g, params, input, proj);
      t.data[i] = saved - eps;
      const double lm = graph_loss(g, params, input, proj);
      t.data[i] = saved;
      const double numeric = (lp - lm) / (2.0 * eps);
      res.max_err = std::max(res.max_err, scaled_err(t.grad[i], numeric));
      ++res.entries_checked;
    }
  }
  for (std::size_t t = 0; t < input.size(); ++t) {
    for (Eigen::Index c = 0; c < input[t].cols(); ++c) {
      for (Eigen::Index r = 0; r < input[t].rows(); ++r) {
        const double saved = input[t](r, c);
        input[t](r, c) = saved + eps;
        const double lp = graph_loss(g, params, input, proj);
        input[t](r, c) = saved - eps;
        const double lm = graph_loss(g, params, input, proj);
        input[t](r, c) = saved;
        const double numeric = (lp - lm) / (2.0 * eps);
        res.max_err = std::max(res.max_err, scaled_err(dinput[t](r, c), numeric));
        ++res.entries_checked;
      }
    }
  }
  return res;
}

}  // namespace fdcheck
