#pragma once

#include "blescope/nn/params.hpp"

namespace blescope::nn {

struct AdamConfig {
  double lr = 1e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Standard bias-corrected Adam update over every tensor in `params`.
// Throws TrainingAborted on a non-finite gradient.
void adam_step(ModelParams& params, const AdamConfig& cfg);

}  // namespace blescope::nn
