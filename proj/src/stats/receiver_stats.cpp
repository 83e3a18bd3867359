#include "blescope/stats/receiver_stats.hpp"

#include "blescope/core/error.hpp"

namespace blescope::stats {

ReceiverStats receiver_stats(const Run& run) {
  const int T = run.length();
  if (T == 0) throw Error("receiver_stats: empty run");

  ReceiverStats out;
  double sum = 0.0;
  long nonzero = 0;
  int dead_seconds = 0;
  int streaks = 0;
  int current_streak = 0;
  int streak_total = 0;

  for (int c = 0; c < T; ++c) {
    bool any = false;
    for (int b = 0; b < run.rssi.rows(); ++b) {
      const double v = run.rssi(b, c);
      if (v > 0.0) {
        sum += v;
        ++nonzero;
        any = true;
      }
    }
    if (!any) {
      ++dead_seconds;
      ++current_streak;
    } else if (current_streak > 0) {
      ++streaks;
      streak_total += current_streak;
      current_streak = 0;
    }
  }
  if (current_streak > 0) {
    ++streaks;
    streak_total += current_streak;
  }

  out.mean_nonzero_rssi = nonzero > 0 ? sum / static_cast<double>(nonzero) : 0.0;
  out.failure_pct = 100.0 * static_cast<double>(dead_seconds) / static_cast<double>(T);
  out.mean_dead_time_s =
      streaks > 0 ? static_cast<double>(streak_total) / static_cast<double>(streaks) : 0.0;
  return out;
}

}  // namespace blescope::stats
