#pragma once

#include <Eigen/Dense>
#include <vector>

#include "blescope/core/types.hpp"

namespace blescope::knn {

// Fingerprint database: flattened B*H feature vectors with their locations.
class FingerprintDb {
 public:
  void add(const RssiWindow& window, const Location& loc);
  void add(const Eigen::VectorXd& features, const Location& loc);

  static FingerprintDb from_samples(const std::vector<LabeledSample>& samples);

  std::size_t size() const { return entries_.size(); }
  const Eigen::VectorXd& features(std::size_t i) const { return entries_[i].features; }
  const Location& location(std::size_t i) const { return entries_[i].location; }

 private:
  struct Entry {
    Eigen::VectorXd features;
    Location location;
  };
  std::vector<Entry> entries_;
};

Eigen::VectorXd flatten_window(const RssiWindow& w);

// Weighted KNN regression: inverse-distance weights over the k nearest
// entries (ties at the k boundary break by insertion order). A zero-distance
// neighbor short-circuits to its stored location. `epsilon` guards the
// division; pass 0 to disable the guard on known-nondegenerate data.
Location knn_predict(const FingerprintDb& db, const RssiWindow& query, int k,
                     double epsilon = 1e-9);
Location knn_predict(const FingerprintDb& db, const Eigen::VectorXd& query, int k,
                     double epsilon = 1e-9);

}  // namespace blescope::knn
