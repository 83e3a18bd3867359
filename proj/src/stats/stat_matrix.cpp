#include "blescope/stats/stat_matrix.hpp"

#include <fstream>

#include <json.hpp>

#include "blescope/core/error.hpp"

namespace blescope::stats {

StatMatrix compute_stat_matrix(const std::vector<Eigen::VectorXd>& seconds, Brand brand) {
  if (seconds.empty()) throw Error("compute_stat_matrix: no samples");
  const int B = static_cast<int>(seconds.front().size());

  StatMatrix out;
  out.brand = brand;
  out.m = Eigen::MatrixXd::Zero(B, B);
  out.support = Eigen::MatrixXi::Zero(B, B);

  for (const Eigen::VectorXd& s : seconds) {
    if (static_cast<int>(s.size()) != B)
      throw Error("compute_stat_matrix: inconsistent beacon count");
    for (int i = 0; i < B; ++i) {
      if (s[i] > 0.0) {
        out.m.row(i) += s.transpose();
        out.support.row(i).array() += 1;
      }
    }
  }
  for (int i = 0; i < B; ++i)
    for (int j = 0; j < B; ++j)
      if (out.support(i, j) > 0) out.m(i, j) /= out.support(i, j);
  return out;
}

StatMatrix stat_matrix_for_brand(const std::vector<Run>& runs, Brand target) {
  std::vector<Eigen::VectorXd> seconds;
  for (const Run& run : runs) {
    if (run.phone.brand != target) continue;
    for (int c = 0; c < run.length(); ++c) seconds.push_back(run.rssi.col(c));
  }
  if (seconds.empty())
    throw Error(std::string("stat_matrix_for_brand: no data for brand '") +
                brand_name(target) + "'");
  return compute_stat_matrix(seconds, target);
}

void write_stat_matrix_csv(const StatMatrix& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot write stat matrix: " + path);
  os.precision(12);
  for (int i = 0; i < m.beacons(); ++i) {
    for (int j = 0; j < m.beacons(); ++j) {
      if (j) os << ",";
      os << m.m(i, j);
    }
    os << "\n";
  }
}

void write_stat_matrix_json(const StatMatrix& m, const std::string& path) {
  nlohmann::json j;
  j["brand"] = brand_name(m.brand);
  j["beacons"] = m.beacons();
  auto rows = nlohmann::json::array();
  auto supp = nlohmann::json::array();
  for (int i = 0; i < m.beacons(); ++i) {
    auto row = nlohmann::json::array();
    auto srow = nlohmann::json::array();
    for (int jj = 0; jj < m.beacons(); ++jj) {
      row.push_back(m.m(i, jj));
      srow.push_back(m.support(i, jj));
    }
    rows.push_back(row);
    supp.push_back(srow);
  }
  j["m"] = rows;
  j["support"] = supp;
  std::ofstream os(path);
  if (!os) throw Error("cannot write stat matrix: " + path);
  os << j.dump(2) << "\n";
}

}  // namespace blescope::stats
