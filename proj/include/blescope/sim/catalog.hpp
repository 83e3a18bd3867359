#pragma once

#include <string>
#include <vector>

#include "blescope/sim/environment.hpp"

namespace blescope::sim {

// Shifted RSSI a phone with zero gain offset reads at the 1 m calibration
// distance (-77 dBm measured power).
constexpr double kIsolatedReferenceShifted = 23.0;

// Observed receiver statistics for one phone model, as published for the
// 15-phone measurement campaign: mean isolated RSSI at 1 m, in-building
// RSSI variance, percentage of all-zero seconds, and mean failure duration.
struct ObservedPhoneStats {
  std::string name;
  Brand brand;
  int model_index;
  double isolated_mean_rssi;   // shifted units at 1 m
  double rssi_var;             // dB^2 in the deployed building
  double failure_pct;          // % of seconds with no beacons at all
  double mean_dead_time_s;     // mean failure duration
  double per_beacon_drop_rate; // not measured per model; brand-level default
};

PhoneProfile profile_from_observed(const ObservedPhoneStats& s);

// The 15-model reference catalog (5 brands x 3 models).
std::vector<ObservedPhoneStats> reference_stats();
std::vector<PhoneProfile> reference_catalog();

// JSON config I/O. Profile files store observed statistics; the loader
// derives simulator parameters from them.
std::vector<PhoneProfile> load_profiles(const std::string& path);
void write_profiles(const std::vector<ObservedPhoneStats>& stats, const std::string& path);

Environment load_environment(const std::string& path);
void write_environment(const Environment& env, const std::string& path);

// 47-beacon default environment spanning a 50 m x 40 m floor.
Environment default_environment();

}  // namespace blescope::sim
