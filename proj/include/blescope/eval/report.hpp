#pragma once

#include <string>

#include "blescope/eval/metrics.hpp"

namespace blescope::eval {

// Two-column CSV (error_m, cumulative_fraction); fractions are monotone
// non-decreasing and end at 1.0.
void export_cdf(const EvalReport& report, const std::string& path);

// Machine form; byte-identical for identical reports.
std::string report_to_json(const EvalReport& report);
void write_report_json(const EvalReport& report, const std::string& path);

// Human-readable table. Includes the published DeepBLE results from the
// original 15-phone building dataset as context; those figures are not
// reproducible from synthetic data and are display-only.
std::string format_report_table(const EvalReport& report);

}  // namespace blescope::eval
