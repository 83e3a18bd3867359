#pragma once

#include <cstdint>

#include "blescope/core/types.hpp"
#include "blescope/sim/environment.hpp"

namespace blescope::sim {

// Log-distance path loss: measured_power - 10*n*log10(d / 1m), with the
// distance floored at 0.1 m. Returns raw dBm before receiver effects.
double path_loss_rssi(const Environment& env, int beacon, const Location& pos);

// Random walk at 1 Hz inside the environment bounds. Per-step speed is
// uniform in [speed_min, speed_max]; headings resample until the step stays
// in bounds. Deterministic given the seed.
Trajectory random_walk(const Environment& env, int duration_s, double speed_min,
                       double speed_max, std::uint64_t seed);

struct SynthOptions {
  Split split = Split::kTrain;
  bool labeled = true;
  std::string run_id = "synth";
};

// Generates one run: per second, per beacon, ideal path-loss dBm plus the
// profile's gain offset and Gaussian noise; values below -100 dBm read as 0;
// independent per-beacon drops; whole-second receiver failures with geometric
// dead times. Deterministic given (env, profile, traj, seed).
Run synth_run(const Environment& env, const PhoneProfile& profile, const Trajectory& traj,
              std::uint64_t seed, const SynthOptions& opts = {});

}  // namespace blescope::sim
