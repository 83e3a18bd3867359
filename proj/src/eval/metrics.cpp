#include "blescope/eval/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::eval {

double absolute_error(const Location& pred, const Location& truth) {
  return std::hypot(pred.x - truth.x, pred.y - truth.y);
}

double percentile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) throw Error("percentile: empty sample");
  if (sorted.size() == 1) return sorted[0];
  const double rank = p * static_cast<double>(sorted.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(rank);
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = rank - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

ErrorStats error_stats(std::vector<double> errors) {
  if (errors.empty()) throw Error("error_stats: empty sample");
  ErrorStats s;
  s.count = errors.size();
  double sum = 0.0;
  for (double e : errors) sum += e;
  s.mean = sum / static_cast<double>(errors.size());
  double var = 0.0;
  for (double e : errors) var += (e - s.mean) * (e - s.mean);
  s.stddev = std::sqrt(var / static_cast<double>(errors.size()));
  std::sort(errors.begin(), errors.end());
  s.median = percentile(errors, 0.5);
  s.p90 = percentile(errors, 0.9);
  s.max = errors.back();
  return s;
}

EvalReport evaluate(const Predictor& predict, const std::vector<LabeledSample>& test,
                    const std::string& method, const std::string& scenario) {
  if (test.empty()) throw Error("evaluate: empty test set");

  EvalReport report;
  report.method = method;
  report.scenario = scenario;

  std::vector<double> all;
  std::map<int, std::vector<double>> by_phone;
  all.reserve(test.size());
  for (const auto& s : test) {
    const double ae = absolute_error(predict(s.window), s.location);
    all.push_back(ae);
    by_phone[s.window.phone.index].push_back(ae);
    report.phone_brands[s.window.phone.index] = brand_name(s.window.phone.brand);
  }

  report.overall = error_stats(all);
  for (auto& [idx, errs] : by_phone) report.per_phone[idx] = error_stats(errs);
  std::sort(all.begin(), all.end());
  report.cdf = std::move(all);
  return report;
}

}  // namespace blescope::eval
