#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope::stats {

// Brand-conditional co-detection statistics:
//   m(i, j) = mean of s_j over per-second samples with s_i > 0.
// support(i, j) counts those samples; pairs with no support have m = 0.
struct StatMatrix {
  Eigen::MatrixXd m;
  Eigen::MatrixXi support;
  Brand brand = Brand::kApple;

  int beacons() const { return static_cast<int>(m.rows()); }
};

// `seconds` are raw per-second shifted-RSSI vectors (not windows).
StatMatrix compute_stat_matrix(const std::vector<Eigen::VectorXd>& seconds, Brand brand);

// Gathers every per-second vector from runs of brand J and aggregates.
// Uses raw (un-augmented) data by design.
StatMatrix stat_matrix_for_brand(const std::vector<Run>& runs, Brand target);

void write_stat_matrix_csv(const StatMatrix& m, const std::string& path);
void write_stat_matrix_json(const StatMatrix& m, const std::string& path);

}  // namespace blescope::stats
