#pragma once

#include <cstdint>
#include <vector>

#include "blescope/core/types.hpp"
#include "blescope/nn/graph.hpp"

namespace blescope::model {

struct TransNetConfig {
  int beacons = kDefaultBeaconCount;
  // Interior channel schedule of the 6-layer conv autoencoder
  // (B -> 64 -> 32 -> 16 -> 32 -> 64 -> B).
  std::vector<int> channels = {64, 32, 16, 32, 64};
  int kernel = 3;
  double input_scale = 0.01;
};

// Residual signal translation: g(S) = ReLU(r(S) + S), where r is a 1-D
// convolutional autoencoder over the time axis. The final conv stays linear
// so the residual can correct in both directions; the output ReLU keeps
// translated RSSI non-negative.
class TransNet {
 public:
  TransNet(const TransNetConfig& cfg, std::uint64_t seed);
  TransNet(const TransNetConfig& cfg, nn::ModelParams params);

  static nn::Graph make_graph(const TransNetConfig& cfg);

  // Inference on one window; returns the translated window in the same
  // (raw shifted) units as the input.
  Eigen::MatrixXd translate_window(const RssiWindow& w);

  // Training path on scaled sequences.
  nn::Seq forward_scaled(const nn::Seq& scaled_input, nn::Tape& tape);

  // Zeroes the output conv layer so r(S) = 0 and g(S) = ReLU(S) = S.
  void zero_residual_output();

  const TransNetConfig& config() const { return cfg_; }
  nn::ModelParams& params() { return params_; }
  const nn::ModelParams& params() const { return params_; }

 private:
  TransNetConfig cfg_;
  nn::Graph graph_;
  nn::ModelParams params_;
};

}  // namespace blescope::model
