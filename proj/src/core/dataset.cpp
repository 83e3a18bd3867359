#include "blescope/core/dataset.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>

#include <json.hpp>

#include "blescope/core/error.hpp"

namespace blescope {

Manifest load_manifest(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw Error("cannot open manifest: " + path);
  nlohmann::json j;
  try {
    is >> j;
  } catch (const std::exception& e) {
    throw Error("manifest parse error in " + path + ": " + e.what());
  }
  Manifest m;
  const auto base = std::filesystem::path(path).parent_path();
  for (const auto& r : j.at("runs")) {
    Manifest::Entry e;
    std::filesystem::path p = r.at("path").get<std::string>();
    e.path = p.is_absolute() ? p.string() : (base / p).string();
    e.split = split_from_string(r.at("split").get<std::string>());
    m.entries.push_back(std::move(e));
  }
  return m;
}

void write_manifest(const Manifest& m, const std::string& path) {
  nlohmann::json j;
  j["runs"] = nlohmann::json::array();
  for (const auto& e : m.entries)
    j["runs"].push_back({{"path", e.path}, {"split", split_name(e.split)}});
  std::ofstream os(path);
  if (!os) throw Error("cannot write manifest: " + path);
  os << j.dump(2) << "\n";
}

Dataset::Dataset(std::vector<Run> runs) : runs_(std::move(runs)) { validate_disjoint(); }

Dataset Dataset::load(const std::string& manifest_path, const IngestSchema& schema) {
  const Manifest m = load_manifest(manifest_path);
  std::vector<Run> runs;
  runs.reserve(m.entries.size());
  for (const auto& e : m.entries) runs.push_back(ingest_run(e.path, schema, e.split));
  return Dataset(std::move(runs));
}

std::vector<Run> Dataset::runs_for(Split split) const {
  std::vector<Run> out;
  for (const auto& r : runs_)
    if (r.split == split) out.push_back(r);
  return out;
}

void Dataset::validate_disjoint() const {
  std::map<std::pair<int, long>, Split> seen;
  for (const auto& r : runs_) {
    for (int c = 0; c < r.length(); ++c) {
      const auto key = std::make_pair(r.phone.index, r.time_at(c));
      auto [it, inserted] = seen.emplace(key, r.split);
      if (!inserted && it->second != r.split)
        throw Error("splits overlap: phone " + std::to_string(key.first) + " at t=" +
                    std::to_string(key.second) + " appears in '" +
                    split_name(it->second) + "' and '" + split_name(r.split) + "'");
    }
  }
}

void require_no_test_runs(const std::vector<Run>& runs, const std::string& context) {
  for (const auto& r : runs)
    if (r.split == Split::kTest)
      throw DataHygieneError(context + ": refusing to read test-tagged run '" + r.id +
                             "'; the test split is reserved for final evaluation");
}

}  // namespace blescope
