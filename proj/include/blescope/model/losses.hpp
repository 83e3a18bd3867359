#pragma once

#include <Eigen/Dense>

#include "blescope/core/types.hpp"
#include "blescope/stats/stat_matrix.hpp"

namespace blescope::model {

// Squared Euclidean localization error.
double loss_loc(const Location& pred, const Location& truth);
Eigen::Vector2d loss_loc_grad(const Location& pred, const Location& truth);

// Position smoothness between consecutive predictions. Gradient w.r.t.
// pred_t is +2*diff; w.r.t. pred_prev it is the negative of that.
double loss_ps(const Eigen::Vector2d& pred_t, const Eigen::Vector2d& pred_prev);
Eigen::Vector2d loss_ps_grad(const Eigen::Vector2d& pred_t, const Eigen::Vector2d& pred_prev);

struct SslOptions {
  double tau = 0.1;
  // w_it = exp((S_it - M_ii)/tau) overflows long before the double range
  // ends; the exponent is capped here (raise or disable deliberately).
  double weight_exponent_cap = 50.0;
  // Skip (i, j) pairs that were never co-observed (support == 0).
  bool mask_zero_support = true;
};

struct MatrixLoss {
  double value = 0.0;
  Eigen::MatrixXd grad;  // same shape as the translated window
};

// Statistic similarity loss. `translated` is the translation output, `input`
// the untranslated window (weights depend on the input only), `M` the
// brand-conditional statistics in the same units as both.
MatrixLoss loss_ssl(const Eigen::MatrixXd& translated, const Eigen::MatrixXd& input,
                    const stats::StatMatrix& M, const SslOptions& opts = {});

// Temporal smoothness: sum_t sum_i |g(i,t) - g(i,t+1)|; zero when H == 1.
MatrixLoss loss_ts(const Eigen::MatrixXd& translated);

}  // namespace blescope::model
