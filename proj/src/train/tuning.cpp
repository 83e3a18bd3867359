#include "blescope/train/tuning.hpp"

#include <tuple>

#include "blescope/core/error.hpp"
#include "blescope/core/windows.hpp"
#include "blescope/eval/metrics.hpp"

namespace blescope::train {

LossWeights tune_weights(const std::vector<LossWeights>& grid,
                         const WeightObjective& objective) {
  if (grid.empty()) throw Error("tune_weights: empty grid");
  std::size_t best = 0;
  double best_score = objective(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double score = objective(grid[i]);
    const auto key = std::make_tuple(grid[i].w_ssl, grid[i].w_ts, grid[i].w_ps);
    const auto best_key =
        std::make_tuple(grid[best].w_ssl, grid[best].w_ts, grid[best].w_ps);
    if (score < best_score || (score == best_score && key < best_key)) {
      best = i;
      best_score = score;
    }
  }
  return grid[best];
}

std::vector<LossWeights> default_weight_grid() {
  std::vector<LossWeights> grid;
  for (double ps : {0.01, 0.1})
    for (double ssl : {0.001, 0.01})
      for (double ts : {0.001, 0.01})
        for (double u : {0.1, 1.0}) {
          LossWeights w;
          w.w_loc = 1.0;
          w.w_ps = ps;
          w.w_ssl = ssl;
          w.w_ts = ts;
          w.w_u = u;
          grid.push_back(w);
        }
  return grid;
}

WeightObjective make_scenario2_objective(const std::vector<Run>& train_runs,
                                         const std::vector<Run>& val_runs,
                                         const ScenarioConfig& cfg) {
  require_no_test_runs(train_runs, "tune_weights");
  require_no_test_runs(val_runs, "tune_weights (validation)");
  if (val_runs.empty()) throw Error("tune_weights: empty validation split");

  return [train_runs, val_runs, cfg](const LossWeights& w) {
    ScenarioConfig c = cfg;
    c.scenario = 2;
    c.weights = w;
    Scenario2Result r = train_scenario2(train_runs, val_runs, c);
    std::vector<LabeledSample> val_samples;
    for (const Run& run : restrict_runs(val_runs, c.known_brands)) {
      auto ws = make_labeled_windows(run, c.window_len);
      val_samples.insert(val_samples.end(), ws.begin(), ws.end());
    }
    if (val_samples.empty()) throw Error("tune_weights: validation split has no windows");
    double sum = 0.0;
    for (const auto& s : val_samples)
      sum += eval::absolute_error(predict_composed(r.transnet, r.locnet, s.window),
                                  s.location);
    return sum / static_cast<double>(val_samples.size());
  };
}

}  // namespace blescope::train
