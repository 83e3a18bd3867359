#include "blescope/core/windows.hpp"

#include "blescope/core/error.hpp"

namespace blescope {

namespace {

RssiWindow window_at(const Run& run, int end_col, int window_len) {
  RssiWindow w;
  w.values = run.rssi.middleCols(end_col - window_len + 1, window_len);
  w.phone = run.phone;
  w.end_time = run.time_at(end_col);
  return w;
}

}  // namespace

std::vector<LabeledSample> make_labeled_windows(const Run& run, int window_len) {
  if (window_len < 1) throw Error("make_labeled_windows: H must be >= 1");
  if (!run.has_labels)
    throw Error("make_labeled_windows: run '" + run.id + "' has no locations");
  std::vector<LabeledSample> out;
  const int n = run.length();
  for (int end = window_len - 1; end < n; ++end)
    out.push_back({window_at(run, end, window_len), run.locations[end]});
  return out;
}

std::vector<UnlabeledSample> make_unlabeled_windows(const Run& run, int window_len) {
  if (window_len < 1) throw Error("make_unlabeled_windows: H must be >= 1");
  std::vector<UnlabeledSample> out;
  const int n = run.length();
  for (int end = window_len - 1; end < n; ++end)
    out.push_back({window_at(run, end, window_len)});
  return out;
}

std::vector<LabeledSample> restrict_dataset(const std::vector<LabeledSample>& data,
                                            const std::set<Brand>& brands) {
  if (brands.empty()) throw Error("restrict_dataset: brand set must be nonempty");
  std::vector<LabeledSample> out;
  for (const auto& s : data)
    if (brands.count(s.window.phone.brand) != 0) out.push_back(s);
  return out;
}

std::vector<Run> restrict_runs(const std::vector<Run>& runs, const std::set<Brand>& brands) {
  if (brands.empty()) throw Error("restrict_runs: brand set must be nonempty");
  std::vector<Run> out;
  for (const auto& r : runs)
    if (brands.count(r.phone.brand) != 0) out.push_back(r);
  return out;
}

}  // namespace blescope
