#include "blescope/sim/simulate.hpp"

#include <cmath>

#include "blescope/core/encoding.hpp"
#include "blescope/core/error.hpp"
#include "blescope/nn/rng.hpp"

namespace blescope::sim {

double path_loss_rssi(const Environment& env, int beacon, const Location& pos) {
  const Location& b = env.beacon_positions.at(static_cast<std::size_t>(beacon));
  const double d = std::hypot(pos.x - b.x, pos.y - b.y);
  return env.measured_power_dbm -
         10.0 * env.path_loss_exponent * std::log10(std::max(d, 0.1));
}

Trajectory random_walk(const Environment& env, int duration_s, double speed_min,
                       double speed_max, std::uint64_t seed) {
  env.validate();
  if (duration_s < 1) throw Error("random_walk: duration must be >= 1");
  if (speed_min < 0.0 || speed_max < speed_min)
    throw Error("random_walk: invalid speed range");

  nn::Rng rng(seed);
  Trajectory traj;
  traj.waypoints.reserve(static_cast<std::size_t>(duration_s));

  Location pos{rng.uniform(env.bounds.min_x, env.bounds.max_x),
               rng.uniform(env.bounds.min_y, env.bounds.max_y)};
  traj.waypoints.push_back(pos);
  constexpr double kTwoPi = 6.283185307179586476925286766559;
  for (int t = 1; t < duration_s; ++t) {
    const double speed = rng.uniform(speed_min, speed_max);
    Location next = pos;
    for (int attempt = 0; attempt < 64; ++attempt) {
      const double heading = rng.uniform(0.0, kTwoPi);
      const Location cand{pos.x + speed * std::cos(heading),
                          pos.y + speed * std::sin(heading)};
      if (env.bounds.contains(cand)) {
        next = cand;
        break;
      }
    }
    // 64 misses means the speed exceeds the room; stay put rather than leave.
    pos = next;
    traj.waypoints.push_back(pos);
  }
  return traj;
}

Run synth_run(const Environment& env, const PhoneProfile& profile, const Trajectory& traj,
              std::uint64_t seed, const SynthOptions& opts) {
  env.validate();
  profile.validate();
  if (traj.duration() < 1) throw Error("synth_run: empty trajectory");

  const int B = env.beacon_count();
  const int T = traj.duration();

  nn::Rng base(seed);
  nn::Rng noise_rng = base.split(1);
  nn::Rng drop_rng = base.split(2);
  nn::Rng fail_rng = base.split(3);
  const double noise_sd = std::sqrt(profile.noise_var);

  Run run;
  run.id = opts.run_id;
  run.phone = {profile.model_index, profile.brand};
  run.split = opts.split;
  run.start_time = traj.start_time;
  run.rssi = Eigen::MatrixXd::Zero(B, T);
  run.has_labels = opts.labeled;
  if (opts.labeled) run.locations.assign(static_cast<std::size_t>(T), Location{});

  int dead_remaining = 0;
  bool just_recovered = false;
  for (int t = 0; t < T; ++t) {
    const Location& pos = traj.waypoints[static_cast<std::size_t>(t)];
    if (opts.labeled) run.locations[static_cast<std::size_t>(t)] = pos;

    // Draw noise and drop variates unconditionally so two profiles sharing a
    // seed stay sample-aligned (used to isolate gain-offset effects).
    Eigen::VectorXd col = Eigen::VectorXd::Zero(B);
    for (int b = 0; b < B; ++b) {
      const double dbm = path_loss_rssi(env, b, pos) + profile.gain_offset_db +
                         noise_rng.normal(0.0, noise_sd);
      const double dropped = drop_rng.uniform();
      double s = shift_rssi(dbm);  // below -100 dBm reads as undetected
      if (s > 0.0 && dropped < profile.per_beacon_drop_rate) s = 0.0;
      col[b] = s;
    }

    bool dead = false;
    if (dead_remaining > 0) {
      dead = true;
      if (--dead_remaining == 0) just_recovered = true;
    } else if (just_recovered) {
      just_recovered = false;  // one guaranteed alive second after a failure
    } else if (profile.failure_rate > 0.0 && fail_rng.uniform() < profile.failure_rate) {
      dead = true;
      // Geometric duration with mean mean_dead_time_s; this second counts.
      const double p = 1.0 / profile.mean_dead_time_s;
      int len = 1;
      while (fail_rng.uniform() >= p) ++len;
      dead_remaining = len - 1;
      if (dead_remaining == 0) just_recovered = true;
    }

    if (!dead) run.rssi.col(t) = col;
  }
  return run;
}

}  // namespace blescope::sim
