#include "blescope/baseline/knn.hpp"

#include <algorithm>
#include <cmath>

#include "blescope/core/error.hpp"

namespace blescope::knn {

Eigen::VectorXd flatten_window(const RssiWindow& w) {
  return Eigen::Map<const Eigen::VectorXd>(w.values.data(), w.values.size());
}

void FingerprintDb::add(const RssiWindow& window, const Location& loc) {
  add(flatten_window(window), loc);
}

void FingerprintDb::add(const Eigen::VectorXd& features, const Location& loc) {
  if (!entries_.empty() && entries_.front().features.size() != features.size())
    throw Error("FingerprintDb: inconsistent feature dimension");
  entries_.push_back({features, loc});
}

FingerprintDb FingerprintDb::from_samples(const std::vector<LabeledSample>& samples) {
  FingerprintDb db;
  for (const auto& s : samples) db.add(s.window, s.location);
  return db;
}

Location knn_predict(const FingerprintDb& db, const RssiWindow& query, int k,
                     double epsilon) {
  return knn_predict(db, flatten_window(query), k, epsilon);
}

Location knn_predict(const FingerprintDb& db, const Eigen::VectorXd& query, int k,
                     double epsilon) {
  if (k < 1) throw Error("knn_predict: k must be >= 1");
  if (db.size() < static_cast<std::size_t>(k))
    throw Error("knn_predict: database has " + std::to_string(db.size()) +
                " entries, need at least k = " + std::to_string(k));

  std::vector<std::pair<double, std::size_t>> dist(db.size());
  for (std::size_t i = 0; i < db.size(); ++i) {
    if (db.features(i).size() != query.size())
      throw Error("knn_predict: query dimension mismatch");
    dist[i] = {(db.features(i) - query).norm(), i};
  }
  // stable partial sort: equal distances keep insertion order
  std::stable_sort(dist.begin(), dist.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  double wsum = 0.0, xsum = 0.0, ysum = 0.0;
  for (int n = 0; n < k; ++n) {
    const auto& [d, idx] = dist[static_cast<std::size_t>(n)];
    if (d == 0.0) return db.location(idx);  // exact fingerprint match
    const double w = 1.0 / std::max(d, epsilon);
    wsum += w;
    xsum += w * db.location(idx).x;
    ysum += w * db.location(idx).y;
  }
  return {xsum / wsum, ysum / wsum};
}

}  // namespace blescope::knn
