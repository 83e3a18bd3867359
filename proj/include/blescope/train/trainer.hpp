#pragma once

#include <string>
#include <vector>

#include "blescope/core/dataset.hpp"
#include "blescope/eval/metrics.hpp"
#include "blescope/stats/stat_matrix.hpp"
#include "blescope/train/config.hpp"

namespace blescope::train {

struct EpochRecord {
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
};

struct TrainReport {
  std::vector<EpochRecord> epochs;
  std::string checkpoint_id;
  double wall_clock_s = 0.0;
  int skipped_pairs = 0;  // window pairs dropped for non-consecutive times
  bool aborted = false;
  std::string abort_reason;
  std::string note;  // degenerate-phase warnings and the like
};

std::string train_report_to_json(const TrainReport& report);

struct Scenario1Result {
  model::LocNet locnet;
  TrainReport report;
};

struct Scenario2Result {
  model::TransNet transnet;
  model::LocNet locnet;
  stats::StatMatrix stat_matrix;  // raw units, target brand
  TrainReport report;
};

struct Scenario3Result {
  model::TransNet transnet;
  model::LocNet locnet;
  stats::StatMatrix stat_matrix;
  TrainReport phase1;
  TrainReport phase2;
};

// Scenario 1: plain supervised localization on all labeled runs (optionally
// brand-filtered via cfg.restrict_brands; that is also how the LocNet-only
// baselines are trained).
Scenario1Result train_scenario1(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const ScenarioConfig& cfg);

// Scenario 2: joint TransNet+LocNet on labeled data from the known brands,
// with the statistic-similarity machinery anchored to cfg.target_brand.
Scenario2Result train_scenario2(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const ScenarioConfig& cfg);

// Scenario 3: phase 1 is scenario 2; phase 2 continues semi-supervised with
// unlabeled runs from cfg.unlabeled_brands (label-free losses only there).
Scenario3Result train_scenario3(const std::vector<Run>& train_runs,
                                const std::vector<Run>& val_runs,
                                const std::vector<Run>& unlabeled_runs,
                                const ScenarioConfig& cfg);

// Inference through the translation pipeline (TransNet then LocNet, shared
// normalized space).
Location predict_composed(model::TransNet& transnet, model::LocNet& locnet,
                          const RssiWindow& w);

eval::Predictor make_predictor(model::LocNet& locnet);
eval::Predictor make_predictor(model::TransNet& transnet, model::LocNet& locnet);

}  // namespace blescope::train
