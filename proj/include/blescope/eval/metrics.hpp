#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope::eval {

// Euclidean distance between prediction and ground truth, in meters.
double absolute_error(const Location& pred, const Location& truth);

struct ErrorStats {
  double mean = 0.0;
  double stddev = 0.0;
  double median = 0.0;
  double p90 = 0.0;  // linear interpolation between order statistics
  double max = 0.0;
  std::size_t count = 0;
};

ErrorStats error_stats(std::vector<double> errors);

// p in [0, 1]; linear interpolation between closest ranks of sorted data.
double percentile(const std::vector<double>& sorted, double p);

struct EvalReport {
  std::string method;
  std::string scenario;
  ErrorStats overall;
  std::map<int, ErrorStats> per_phone;        // keyed by model index
  std::map<int, std::string> phone_brands;    // model index -> brand name
  std::vector<double> cdf;                    // sorted absolute errors
};

using Predictor = std::function<Location(const RssiWindow&)>;

// Runs the predictor over a labeled test split and aggregates statistics.
EvalReport evaluate(const Predictor& predict, const std::vector<LabeledSample>& test,
                    const std::string& method, const std::string& scenario);

}  // namespace blescope::eval
