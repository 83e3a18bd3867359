#include "blescope/sim/catalog.hpp"

#include <fstream>

#include <json.hpp>

#include "blescope/core/error.hpp"

namespace blescope::sim {

namespace {
using nlohmann::json;

// Brand-level drop rates: the per-beacon dropout visible in raw traces is not
// itemized per model, so brands share a default.
constexpr double kDropApple = 0.0;
constexpr double kDropSamsung = 0.02;
constexpr double kDropGoogle = 0.02;
constexpr double kDropXiaomi = 0.10;
constexpr double kDropHuawei = 0.08;
}  // namespace

PhoneProfile profile_from_observed(const ObservedPhoneStats& s) {
  PhoneProfile p;
  p.name = s.name;
  p.brand = s.brand;
  p.model_index = s.model_index;
  p.gain_offset_db = s.isolated_mean_rssi - kIsolatedReferenceShifted;
  p.noise_var = s.rssi_var;
  p.mean_dead_time_s = s.mean_dead_time_s;
  p.failure_rate = PhoneProfile::failure_entry_rate(s.failure_pct, s.mean_dead_time_s);
  p.per_beacon_drop_rate = s.per_beacon_drop_rate;
  p.validate();
  return p;
}

std::vector<ObservedPhoneStats> reference_stats() {
  using B = Brand;
  return {
      {"iphone_xr", B::kApple, 0, 29.17, 0.37, 0.00, 0.00, kDropApple},
      {"iphone_8", B::kApple, 1, 30.20, 8.25, 0.00, 0.00, kDropApple},
      {"iphone_7", B::kApple, 2, 27.61, 4.07, 0.00, 0.00, kDropApple},
      {"galaxy_s10", B::kSamsung, 3, 33.04, 14.77, 0.16, 1.73, kDropSamsung},
      {"galaxy_note9", B::kSamsung, 4, 30.30, 40.92, 0.16, 1.32, kDropSamsung},
      {"galaxy_a50", B::kSamsung, 5, 30.83, 19.03, 0.17, 1.31, kDropSamsung},
      {"pixel_4xl", B::kGoogle, 6, 24.46, 41.93, 0.00, 0.00, kDropGoogle},
      {"pixel_3xl", B::kGoogle, 7, 30.35, 42.72, 0.00, 0.00, kDropGoogle},
      {"pixel_3axl", B::kGoogle, 8, 28.98, 50.37, 0.00, 0.00, kDropGoogle},
      {"mi_9", B::kXiaomi, 9, 27.39, 41.77, 15.18, 3.20, kDropXiaomi},
      {"mi_9t_pro", B::kXiaomi, 10, 30.39, 62.34, 15.11, 3.19, kDropXiaomi},
      {"redmi_note_8", B::kXiaomi, 11, 32.33, 43.95, 7.88, 1.00, kDropXiaomi},
      {"mate_20_pro", B::kHuawei, 12, 34.67, 21.87, 9.98, 1.45, kDropHuawei},
      {"honor_20_pro", B::kHuawei, 13, 28.04, 35.63, 8.52, 1.51, kDropHuawei},
      {"honor_view_20", B::kHuawei, 14, 26.09, 7.06, 14.96, 1.55, kDropHuawei},
  };
}

std::vector<PhoneProfile> reference_catalog() {
  std::vector<PhoneProfile> out;
  for (const auto& s : reference_stats()) out.push_back(profile_from_observed(s));
  return out;
}

std::vector<PhoneProfile> load_profiles(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open profile catalog: " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error("profile catalog parse error in " + path + ": " + e.what());
  }
  std::vector<PhoneProfile> out;
  for (const auto& p : j.at("phones")) {
    ObservedPhoneStats s;
    s.name = p.at("name").get<std::string>();
    s.brand = brand_from_string(p.at("brand").get<std::string>());
    s.model_index = p.at("model_index").get<int>();
    s.isolated_mean_rssi = p.at("isolated_mean_rssi").get<double>();
    s.rssi_var = p.at("rssi_var").get<double>();
    s.failure_pct = p.at("failure_pct").get<double>();
    s.mean_dead_time_s = p.at("mean_dead_time_s").get<double>();
    s.per_beacon_drop_rate = p.value("per_beacon_drop_rate", 0.0);
    out.push_back(profile_from_observed(s));
  }
  if (out.empty()) throw Error("profile catalog is empty: " + path);
  return out;
}

void write_profiles(const std::vector<ObservedPhoneStats>& stats, const std::string& path) {
  json j;
  j["phones"] = json::array();
  for (const auto& s : stats) {
    j["phones"].push_back({{"name", s.name},
                           {"brand", brand_name(s.brand)},
                           {"model_index", s.model_index},
                           {"isolated_mean_rssi", s.isolated_mean_rssi},
                           {"rssi_var", s.rssi_var},
                           {"failure_pct", s.failure_pct},
                           {"mean_dead_time_s", s.mean_dead_time_s},
                           {"per_beacon_drop_rate", s.per_beacon_drop_rate}});
  }
  std::ofstream os(path);
  if (!os) throw Error("cannot write profile catalog: " + path);
  os << j.dump(2) << "\n";
}

Environment load_environment(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open environment config: " + path);
  json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error("environment config parse error in " + path + ": " + e.what());
  }
  Environment env;
  const auto& b = j.at("bounds");
  env.bounds = {b.at("min_x").get<double>(), b.at("min_y").get<double>(),
                b.at("max_x").get<double>(), b.at("max_y").get<double>()};
  env.tx_power_dbm = j.value("tx_power_dbm", -12.0);
  env.measured_power_dbm = j.value("measured_power_dbm", -77.0);
  env.path_loss_exponent = j.value("path_loss_exponent", 2.5);
  if (j.contains("beacons")) {
    for (const auto& pos : j.at("beacons"))
      env.beacon_positions.push_back({pos.at(0).get<double>(), pos.at(1).get<double>()});
  } else {
    env.beacon_positions = grid_beacons(env.bounds, j.at("beacon_count").get<int>());
  }
  env.validate();
  return env;
}

void write_environment(const Environment& env, const std::string& path) {
  json j;
  j["bounds"] = {{"min_x", env.bounds.min_x},
                 {"min_y", env.bounds.min_y},
                 {"max_x", env.bounds.max_x},
                 {"max_y", env.bounds.max_y}};
  j["tx_power_dbm"] = env.tx_power_dbm;
  j["measured_power_dbm"] = env.measured_power_dbm;
  j["path_loss_exponent"] = env.path_loss_exponent;
  j["beacons"] = json::array();
  for (const auto& p : env.beacon_positions) j["beacons"].push_back({p.x, p.y});
  std::ofstream os(path);
  if (!os) throw Error("cannot write environment config: " + path);
  os << j.dump(2) << "\n";
}

Environment default_environment() {
  Environment env;
  env.bounds = {0.0, 0.0, 50.0, 40.0};
  env.beacon_positions = grid_beacons(env.bounds, kDefaultBeaconCount);
  env.validate();
  return env;
}

}  // namespace blescope::sim
