#pragma once

#include <set>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope {

// Stride-1 sliding windows over a run. Returns T - H + 1 windows; empty when
// the run is shorter than H.
std::vector<LabeledSample> make_labeled_windows(const Run& run, int window_len);
std::vector<UnlabeledSample> make_unlabeled_windows(const Run& run, int window_len);

// Keeps samples whose phone brand is in `brands`, preserving order.
std::vector<LabeledSample> restrict_dataset(const std::vector<LabeledSample>& data,
                                            const std::set<Brand>& brands);

std::vector<Run> restrict_runs(const std::vector<Run>& runs, const std::set<Brand>& brands);

}  // namespace blescope
