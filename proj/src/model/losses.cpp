#include "blescope/model/losses.hpp"

#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::model {

double loss_loc(const Location& pred, const Location& truth) {
  const double dx = pred.x - truth.x;
  const double dy = pred.y - truth.y;
  return dx * dx + dy * dy;
}

Eigen::Vector2d loss_loc_grad(const Location& pred, const Location& truth) {
  return {2.0 * (pred.x - truth.x), 2.0 * (pred.y - truth.y)};
}

double loss_ps(const Eigen::Vector2d& pred_t, const Eigen::Vector2d& pred_prev) {
  return (pred_t - pred_prev).squaredNorm();
}

Eigen::Vector2d loss_ps_grad(const Eigen::Vector2d& pred_t, const Eigen::Vector2d& pred_prev) {
  return 2.0 * (pred_t - pred_prev);
}

MatrixLoss loss_ssl(const Eigen::MatrixXd& translated, const Eigen::MatrixXd& input,
                    const stats::StatMatrix& M, const SslOptions& opts) {
  if (translated.rows() != input.rows() || translated.cols() != input.cols())
    throw Error("loss_ssl: translated/input shape mismatch");
  if (M.m.rows() != translated.rows())
    throw Error("loss_ssl: stat matrix beacon count mismatch");
  if (opts.tau <= 0.0) throw Error("loss_ssl: tau must be positive");

  const int B = static_cast<int>(translated.rows());
  const int H = static_cast<int>(translated.cols());

  MatrixLoss out;
  out.grad = Eigen::MatrixXd::Zero(B, H);
  for (int t = 0; t < H; ++t) {
    for (int i = 0; i < B; ++i) {
      const double exponent =
          std::min((input(i, t) - M.m(i, i)) / opts.tau, opts.weight_exponent_cap);
      const double w = std::exp(exponent);
      for (int j = 0; j < B; ++j) {
        if (opts.mask_zero_support && M.support(i, j) == 0) continue;
        const double diff = M.m(i, j) - translated(j, t);
        if (diff < 0.0) {
          out.value += w * (-diff);
          out.grad(j, t) += w;
        } else {
          out.value += w * diff * diff;
          out.grad(j, t) += w * (-2.0 * diff);
        }
      }
    }
  }
  return out;
}

MatrixLoss loss_ts(const Eigen::MatrixXd& translated) {
  const int B = static_cast<int>(translated.rows());
  const int H = static_cast<int>(translated.cols());
  MatrixLoss out;
  out.grad = Eigen::MatrixXd::Zero(B, H);
  for (int t = 0; t + 1 < H; ++t) {
    for (int i = 0; i < B; ++i) {
      const double d = translated(i, t) - translated(i, t + 1);
      out.value += std::abs(d);
      const double s = d > 0.0 ? 1.0 : (d < 0.0 ? -1.0 : 0.0);
      out.grad(i, t) += s;
      out.grad(i, t + 1) -= s;
    }
  }
  return out;
}

}  // namespace blescope::model
