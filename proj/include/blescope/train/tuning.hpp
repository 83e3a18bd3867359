#pragma once

#include <functional>
#include <vector>

#include "blescope/train/trainer.hpp"

namespace blescope::train {

// Validation objective: mean absolute localization error for one weight
// setting. The production evaluator trains scenario 2 and scores the val
// split; tests may inject a synthetic objective.
using WeightObjective = std::function<double(const LossWeights&)>;

// Returns the grid point with the lowest objective. Exact ties break toward
// the lexicographically smallest (w_ssl, w_ts, w_ps).
LossWeights tune_weights(const std::vector<LossWeights>& grid, const WeightObjective& objective);

// Default search grid: w_loc = 1; w_ps in {0.01, 0.1}; w_ssl in
// {0.001, 0.01}; w_ts in {0.001, 0.01}; w_u in {0.1, 1}.
std::vector<LossWeights> default_weight_grid();

// Trains scenario 2 with the candidate weights and returns mean AE over the
// validation windows (validation data from the known brands only; test-tagged
// runs are rejected).
WeightObjective make_scenario2_objective(const std::vector<Run>& train_runs,
                                         const std::vector<Run>& val_runs,
                                         const ScenarioConfig& cfg);

}  // namespace blescope::train
