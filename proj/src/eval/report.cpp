#include "blescope/eval/report.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "blescope/core/error.hpp"

namespace blescope::eval {

namespace {

// Published DeepBLE results on the original building dataset (display-only
// context; synthetic runs are not expected to reproduce them).
struct PublishedRef {
  const char* label;
  double mean_ae_m;
};
constexpr PublishedRef kPublishedRefs[] = {
    {"overall, limited labels (scenario 2)", 1.37},
    {"overall, semi-supervised (scenario 3)", 1.34},
    {"best known phone (iPhone XR, scenario 2)", 0.84},
    {"best adapted phone (Mate 20 Pro, scenario 3)", 1.63},
};

nlohmann::json stats_json(const ErrorStats& s) {
  return {{"mean", s.mean},   {"stddev", s.stddev}, {"median", s.median},
          {"p90", s.p90},     {"max", s.max},       {"count", s.count}};
}

}  // namespace

void export_cdf(const EvalReport& report, const std::string& path) {
  if (report.cdf.empty()) throw Error("export_cdf: report has no errors");
  std::ofstream os(path);
  if (!os) throw Error("export_cdf: cannot write " + path);
  os.precision(10);
  os << "error_m,cumulative_fraction\n";
  const double n = static_cast<double>(report.cdf.size());
  for (std::size_t i = 0; i < report.cdf.size(); ++i)
    os << report.cdf[i] << "," << (static_cast<double>(i + 1) / n) << "\n";
  if (!os) throw Error("export_cdf: write failed for " + path);
}

std::string report_to_json(const EvalReport& report) {
  nlohmann::json j;
  j["method"] = report.method;
  j["scenario"] = report.scenario;
  j["overall"] = stats_json(report.overall);
  j["per_phone"] = nlohmann::json::object();
  for (const auto& [idx, s] : report.per_phone) {
    auto entry = stats_json(s);
    auto it = report.phone_brands.find(idx);
    if (it != report.phone_brands.end()) entry["brand"] = it->second;
    j["per_phone"][std::to_string(idx)] = entry;
  }
  j["cdf"] = report.cdf;
  return j.dump(2) + "\n";
}

void write_report_json(const EvalReport& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("write_report_json: cannot write " + path);
  os << report_to_json(report);
  if (!os) throw Error("write_report_json: write failed for " + path);
}

std::string format_report_table(const EvalReport& report) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed;
  os << "method: " << report.method << "  scenario: " << report.scenario << "\n";
  os << "phone            brand      mean     std   median      p90      max\n";
  for (const auto& [idx, s] : report.per_phone) {
    std::string brand;
    auto it = report.phone_brands.find(idx);
    if (it != report.phone_brands.end()) brand = it->second;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "model %-3d        %-8s %7.3f %7.3f %8.3f %8.3f %8.3f\n",
                  idx, brand.c_str(), s.mean, s.stddev, s.median, s.p90, s.max);
    os << buf;
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf), "overall                   %7.3f %7.3f %8.3f %8.3f %8.3f  (n=%zu)\n",
                report.overall.mean, report.overall.stddev, report.overall.median,
                report.overall.p90, report.overall.max, report.overall.count);
  os << buf;
  os << "\npublished reference (original building dataset, display-only):\n";
  for (const auto& ref : kPublishedRefs) {
    std::snprintf(buf, sizeof(buf), "  %-45s %5.2f m\n", ref.label, ref.mean_ae_m);
    os << buf;
  }
  return os.str();
}

}  // namespace blescope::eval
