#include "blescope/model/locnet.hpp"

#include "blescope/core/error.hpp"

namespace blescope::model {

nn::Graph LocNet::make_graph(const LocNetConfig& cfg) {
  using nn::LayerSpec;
  return {
      LayerSpec::lstm(cfg.beacons, cfg.lstm_hidden),
      LayerSpec::lstm(cfg.lstm_hidden, cfg.lstm_hidden),
      LayerSpec::take_last(),
      LayerSpec::dense(cfg.lstm_hidden, cfg.dense_hidden),
      LayerSpec::relu(),
      LayerSpec::dense(cfg.dense_hidden, 2),
  };
}

LocNet::LocNet(const LocNetConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), graph_(make_graph(cfg)) {
  nn::Rng rng(seed);
  nn::init_graph_params(graph_, params_, rng);
}

LocNet::LocNet(const LocNetConfig& cfg, nn::ModelParams params)
    : cfg_(cfg), graph_(make_graph(cfg)), params_(std::move(params)) {}

nn::Seq window_to_seq(const RssiWindow& w, double input_scale) {
  nn::Seq seq(static_cast<std::size_t>(w.length()));
  for (int t = 0; t < w.length(); ++t) seq[static_cast<std::size_t>(t)] = w.values.col(t) * input_scale;
  return seq;
}

Location LocNet::predict(const RssiWindow& w) {
  if (w.beacons() != cfg_.beacons)
    throw Error("LocNet: window has " + std::to_string(w.beacons()) + " beacons, expected " +
                std::to_string(cfg_.beacons));
  nn::Tape tape;
  const nn::Seq out = nn::forward(graph_, params_, window_to_seq(w, cfg_.input_scale), tape);
  return {out[0](0, 0), out[0](1, 0)};
}

nn::Seq LocNet::forward_scaled(const nn::Seq& scaled_input, nn::Tape& tape) {
  return nn::forward(graph_, params_, scaled_input, tape);
}

}  // namespace blescope::model
