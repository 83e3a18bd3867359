#pragma once

#include <cstdint>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope::aug {

struct AugmentConfig {
  std::vector<double> scale_factors;  // each in (0, 1]; one copy per factor
  double drop_prob = 0.0;
  double noise_var = 5.0;             // N(0, 5): variance by default
  bool noise_var_is_stddev = false;   // flip if 5 should mean sigma instead
  int drop_noise_copies = 1;          // copies that get drop then noise
  std::uint64_t seed = 0;

  bool enabled() const {
    return !scale_factors.empty() || (drop_noise_copies > 0 && (drop_prob > 0.0 || noise_var > 0.0));
  }
};

// All three transforms touch only nonzero entries: zeros mean "not detected"
// and must never turn into phantom readings. Labels are never modified.

RssiWindow augment_scale(const RssiWindow& w, double factor);
RssiWindow augment_drop(const RssiWindow& w, double drop_prob, std::uint64_t seed);
RssiWindow augment_noise(const RssiWindow& w, double noise_var, std::uint64_t seed);

// Run-level versions used by the training pipeline; windowing an augmented
// run keeps consecutive windows adjacent for the smoothness loss.
Run augment_scale_run(const Run& run, double factor);
Run augment_drop_run(const Run& run, double drop_prob, std::uint64_t seed);
Run augment_noise_run(const Run& run, double noise_var, std::uint64_t seed);

// Expands `runs` with augmented copies per the config: one scaled copy per
// factor plus `drop_noise_copies` drop+noise copies. Originals come first.
std::vector<Run> augment_runs(const std::vector<Run>& runs, const AugmentConfig& cfg);

}  // namespace blescope::aug
