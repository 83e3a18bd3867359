#include "blescope/sim/environment.hpp"

#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::sim {

void Environment::validate() const {
  if (beacon_positions.empty()) throw Error("environment needs at least one beacon");
  if (measured_power_dbm >= 0.0) throw Error("measured_power_dbm must be negative");
  if (path_loss_exponent < 1.5 || path_loss_exponent > 4.0)
    throw Error("path_loss_exponent must be in [1.5, 4.0]");
  if (bounds.width() <= 0.0 || bounds.height() <= 0.0)
    throw Error("environment bounds are empty");
}

void PhoneProfile::validate() const {
  if (failure_rate < 0.0 || failure_rate > 1.0)
    throw Error("profile '" + name + "': failure_rate must be in [0,1]");
  if (per_beacon_drop_rate < 0.0 || per_beacon_drop_rate > 1.0)
    throw Error("profile '" + name + "': per_beacon_drop_rate must be in [0,1]");
  if (noise_var < 0.0) throw Error("profile '" + name + "': noise_var must be >= 0");
  if (failure_rate > 0.0 && mean_dead_time_s < 1.0)
    throw Error("profile '" + name + "': mean_dead_time_s must be >= 1 when failures occur");
}

double PhoneProfile::failure_entry_rate(double failure_pct, double mean_dead_time_s) {
  if (failure_pct <= 0.0) return 0.0;
  const double f = failure_pct / 100.0;
  if (f >= 1.0) return 1.0;
  return f / (mean_dead_time_s * (1.0 - f));
}

std::vector<Location> grid_beacons(const Bounds& bounds, int count) {
  if (count < 1) throw Error("grid_beacons: count must be >= 1");
  const int nx = static_cast<int>(std::ceil(std::sqrt(
      static_cast<double>(count) * bounds.width() / std::max(bounds.height(), 1e-9))));
  const int ny = static_cast<int>(std::ceil(static_cast<double>(count) / std::max(nx, 1)));
  std::vector<Location> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int iy = 0; iy < ny && static_cast<int>(out.size()) < count; ++iy) {
    for (int ix = 0; ix < nx && static_cast<int>(out.size()) < count; ++ix) {
      out.push_back({bounds.min_x + bounds.width() * (ix + 0.5) / nx,
                     bounds.min_y + bounds.height() * (iy + 0.5) / ny});
    }
  }
  return out;
}

}  // namespace blescope::sim
