#pragma once

#include <string>

#include "blescope/core/types.hpp"

namespace blescope {

// Column map for run CSVs. Defaults match the writer:
//   t,phone,brand,x,y,b0..b{B-1}
// RSSI columns hold raw dBm; blank means "not detected". x,y are blank for
// unlabeled runs.
struct IngestSchema {
  std::string time_col = "t";
  std::string phone_col = "phone";
  std::string brand_col = "brand";
  std::string x_col = "x";
  std::string y_col = "y";
  std::string beacon_prefix = "b";
};

// Parses one run CSV. Applies the shifted encoding (dBm below -100 clamp
// to 0) and zero-fills missing seconds. Throws on malformed rows (with line
// number) and on non-increasing timestamps.
Run ingest_run(const std::string& path, const IngestSchema& schema = {},
               Split split = Split::kTrain);

// Writes a run back out in the same CSV format (shifted values are
// converted back to dBm; zeros become blank cells).
void write_run_csv(const Run& run, const std::string& path);

}  // namespace blescope
