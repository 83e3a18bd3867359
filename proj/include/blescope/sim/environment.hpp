#pragma once

#include <string>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope::sim {

struct Bounds {
  double min_x = 0.0, min_y = 0.0;
  double max_x = 0.0, max_y = 0.0;

  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
  bool contains(const Location& p) const {
    return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
  }
};

struct Environment {
  std::vector<Location> beacon_positions;
  Bounds bounds;
  double tx_power_dbm = -12.0;
  double measured_power_dbm = -77.0;  // at 1 m
  double path_loss_exponent = 2.5;

  int beacon_count() const { return static_cast<int>(beacon_positions.size()); }
  void validate() const;
};

// Receiver characteristics of one phone model.
struct PhoneProfile {
  std::string name;
  Brand brand = Brand::kApple;
  int model_index = 0;
  double gain_offset_db = 0.0;
  double noise_var = 0.0;            // dB^2, per-beacon Gaussian
  double failure_rate = 0.0;         // per-second probability of entering failure
  double mean_dead_time_s = 0.0;     // geometric mean duration of a failure
  double per_beacon_drop_rate = 0.0;

  void validate() const;

  // Entry probability that makes the stationary dead-second fraction equal
  // `failure_pct` when dead periods are geometric with mean `mean_dead_time_s`
  // (alive streaks have mean 1/rate, so fraction = rate*m / (1 + rate*m)).
  static double failure_entry_rate(double failure_pct, double mean_dead_time_s);
};

struct Trajectory {
  std::vector<Location> waypoints;  // one per second
  long start_time = 0;

  int duration() const { return static_cast<int>(waypoints.size()); }
};

// Evenly spread `count` beacons over the bounds on a near-square grid.
std::vector<Location> grid_beacons(const Bounds& bounds, int count);

}  // namespace blescope::sim
