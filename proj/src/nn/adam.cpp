#include "blescope/nn/adam.hpp"

#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::nn {

void adam_step(ModelParams& params, const AdamConfig& cfg) {
  const std::int64_t t = params.step() + 1;
  const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
  const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));

  for (const std::string& name : params.names()) {
    Tensor& p = params.at(name);
    AdamSlot& slot = params.adam_slot(name);
    for (std::size_t i = 0; i < p.data.size(); ++i) {
      const double g = p.grad[i];
      if (!std::isfinite(g))
        throw TrainingAborted("non-finite gradient in tensor '" + name + "'");
      slot.m[i] = cfg.beta1 * slot.m[i] + (1.0 - cfg.beta1) * g;
      slot.v[i] = cfg.beta2 * slot.v[i] + (1.0 - cfg.beta2) * g * g;
      const double mhat = slot.m[i] / bc1;
      const double vhat = slot.v[i] / bc2;
      p.data[i] -= cfg.lr * mhat / (std::sqrt(vhat) + cfg.eps);
    }
  }
  params.set_step(t);
}

}  // namespace blescope::nn
