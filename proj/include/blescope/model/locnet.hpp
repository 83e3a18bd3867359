#pragma once

#include <cstdint>

#include "blescope/core/types.hpp"
#include "blescope/nn/graph.hpp"

namespace blescope::model {

struct LocNetConfig {
  int beacons = kDefaultBeaconCount;
  int lstm_hidden = 128;
  int dense_hidden = 64;
  double input_scale = 0.01;  // shifted RSSI / 100 before the network
};

// Recurrent localization network: 2-layer LSTM over the H columns of a
// window, then a 2-layer dense head on the final hidden state.
class LocNet {
 public:
  LocNet(const LocNetConfig& cfg, std::uint64_t seed);
  LocNet(const LocNetConfig& cfg, nn::ModelParams params);

  static nn::Graph make_graph(const LocNetConfig& cfg);

  // Inference on one window (applies input_scale internally).
  Location predict(const RssiWindow& w);

  // Training path: input already scaled, one (B x N) slice per time step.
  // Output is a Seq of length 1 holding the (2 x N) predictions.
  nn::Seq forward_scaled(const nn::Seq& scaled_input, nn::Tape& tape);

  const LocNetConfig& config() const { return cfg_; }
  nn::ModelParams& params() { return params_; }
  const nn::ModelParams& params() const { return params_; }
  const nn::Graph& graph() const { return graph_; }

 private:
  LocNetConfig cfg_;
  nn::Graph graph_;
  nn::ModelParams params_;
};

// Converts a window into the scaled Seq layout (one column appended per call
// site; helper shared with TransNet and the trainers).
nn::Seq window_to_seq(const RssiWindow& w, double input_scale);

}  // namespace blescope::model
