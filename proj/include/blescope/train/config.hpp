#pragma once

#include <cstdint>
#include <set>

#include "blescope/aug/augment.hpp"
#include "blescope/core/types.hpp"
#include "blescope/model/locnet.hpp"
#include "blescope/model/transnet.hpp"

namespace blescope::train {

struct LossWeights {
  double w_loc = 1.0;
  double w_ps = 0.1;
  double w_ssl = 0.01;
  double w_ts = 0.01;
  double w_u = 1.0;   // scenario 3: weight on the unlabeled expectation
  double tau = 0.1;
};

struct OptimPhase {
  double lr = 1e-4;
  int epochs = 50;
  int batch = 256;
};

struct ScenarioConfig {
  int scenario = 1;

  // Scenario 2/3: brands with labeled data (P') and the translation target
  // brand (J, must lie inside known_brands).
  std::set<Brand> known_brands = {Brand::kApple, Brand::kSamsung};
  Brand target_brand = Brand::kApple;
  // Scenario 3: brands providing unlabeled data (Q'); disjoint from P'.
  std::set<Brand> unlabeled_brands;
  // Scenario 1 / baselines: optional brand filter on the labeled data
  // (empty = use everything).
  std::set<Brand> restrict_brands;

  LossWeights weights;
  OptimPhase phase1{1e-4, 50, 256};
  OptimPhase phase2{1e-5, 20, 256};

  int window_len = kDefaultWindowLength;
  model::LocNetConfig locnet;      // beacon count is filled in from the data
  model::TransNetConfig transnet;
  aug::AugmentConfig augment;

  double ssl_weight_cap = 50.0;
  bool ssl_mask_zero_support = true;

  // Ablation switches (tests and controlled comparisons).
  bool freeze_transnet = false;
  bool transnet_residual_zero_init = false;

  std::uint64_t seed = 0;

  void validate() const;
};

}  // namespace blescope::train
