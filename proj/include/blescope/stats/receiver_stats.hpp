#pragma once

#include "blescope/core/types.hpp"

namespace blescope::stats {

// Receiver-failure diagnostics over one run:
//   mean_nonzero_rssi  mean of detected (nonzero) entries, shifted units
//   failure_pct        100 * (# all-zero seconds) / T
//   mean_dead_time_s   mean length of maximal all-zero streaks
struct ReceiverStats {
  double mean_nonzero_rssi = 0.0;
  double failure_pct = 0.0;
  double mean_dead_time_s = 0.0;
};

ReceiverStats receiver_stats(const Run& run);

}  // namespace blescope::stats
