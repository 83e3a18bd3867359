#include "blescope/aug/augment.hpp"

#include <cmath>

#include "blescope/core/error.hpp"
#include "blescope/nn/rng.hpp"

namespace blescope::aug {

namespace {

void scale_matrix(Eigen::MatrixXd& m, double factor) {
  if (!(factor > 0.0 && factor <= 1.0))
    throw Error("augment_scale: factor must be in (0, 1]");
  m *= factor;  // zeros stay zero
}

void drop_matrix(Eigen::MatrixXd& m, double drop_prob, nn::Rng& rng) {
  if (drop_prob < 0.0 || drop_prob > 1.0)
    throw Error("augment_drop: probability must be in [0, 1]");
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) > 0.0 && rng.uniform() < drop_prob) m(r, c) = 0.0;
}

void noise_matrix(Eigen::MatrixXd& m, double noise_var, nn::Rng& rng) {
  if (noise_var < 0.0) throw Error("augment_noise: variance must be >= 0");
  const double sd = std::sqrt(noise_var);
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      if (m(r, c) > 0.0) m(r, c) = std::max(0.0, m(r, c) + rng.normal(0.0, sd));
}

double effective_variance(const AugmentConfig& cfg) {
  return cfg.noise_var_is_stddev ? cfg.noise_var * cfg.noise_var : cfg.noise_var;
}

}  // namespace

RssiWindow augment_scale(const RssiWindow& w, double factor) {
  RssiWindow out = w;
  scale_matrix(out.values, factor);
  return out;
}

RssiWindow augment_drop(const RssiWindow& w, double drop_prob, std::uint64_t seed) {
  RssiWindow out = w;
  nn::Rng rng(seed);
  drop_matrix(out.values, drop_prob, rng);
  return out;
}

RssiWindow augment_noise(const RssiWindow& w, double noise_var, std::uint64_t seed) {
  RssiWindow out = w;
  nn::Rng rng(seed);
  noise_matrix(out.values, noise_var, rng);
  return out;
}

Run augment_scale_run(const Run& run, double factor) {
  Run out = run;
  scale_matrix(out.rssi, factor);
  return out;
}

Run augment_drop_run(const Run& run, double drop_prob, std::uint64_t seed) {
  Run out = run;
  nn::Rng rng(seed);
  drop_matrix(out.rssi, drop_prob, rng);
  return out;
}

Run augment_noise_run(const Run& run, double noise_var, std::uint64_t seed) {
  Run out = run;
  nn::Rng rng(seed);
  noise_matrix(out.rssi, noise_var, rng);
  return out;
}

std::vector<Run> augment_runs(const std::vector<Run>& runs, const AugmentConfig& cfg) {
  std::vector<Run> out = runs;
  const nn::Rng base(cfg.seed);
  std::uint64_t stream = 0;
  for (const Run& run : runs) {
    for (double factor : cfg.scale_factors) {
      Run copy = augment_scale_run(run, factor);
      copy.id += "+scale";
      out.push_back(std::move(copy));
    }
    for (int i = 0; i < cfg.drop_noise_copies; ++i) {
      nn::Rng rng = base.split(stream++);
      Run copy = run;
      drop_matrix(copy.rssi, cfg.drop_prob, rng);
      noise_matrix(copy.rssi, effective_variance(cfg), rng);
      copy.id += "+dropnoise";
      out.push_back(std::move(copy));
    }
  }
  return out;
}

}  // namespace blescope::aug
