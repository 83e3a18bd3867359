#include "blescope/model/transnet.hpp"

#include "blescope/core/error.hpp"
#include "blescope/model/locnet.hpp"

namespace blescope::model {

nn::Graph TransNet::make_graph(const TransNetConfig& cfg) {
  using nn::LayerSpec;
  if (cfg.channels.size() != 5)
    throw Error("TransNet: channel schedule must list the 5 interior widths");
  nn::Graph g;
  int in_ch = cfg.beacons;
  for (std::size_t i = 0; i < cfg.channels.size(); ++i) {
    g.push_back(LayerSpec::conv1d(in_ch, cfg.channels[i], cfg.kernel));
    g.push_back(LayerSpec::relu());
    in_ch = cfg.channels[i];
  }
  g.push_back(LayerSpec::conv1d(in_ch, cfg.beacons, cfg.kernel));
  g.push_back(LayerSpec::skip_relu());
  return g;
}

TransNet::TransNet(const TransNetConfig& cfg, std::uint64_t seed)
    : cfg_(cfg), graph_(make_graph(cfg)) {
  nn::Rng rng(seed);
  nn::init_graph_params(graph_, params_, rng);
}

TransNet::TransNet(const TransNetConfig& cfg, nn::ModelParams params)
    : cfg_(cfg), graph_(make_graph(cfg)), params_(std::move(params)) {}

Eigen::MatrixXd TransNet::translate_window(const RssiWindow& w) {
  if (w.beacons() != cfg_.beacons)
    throw Error("TransNet: window has " + std::to_string(w.beacons()) +
                " beacons, expected " + std::to_string(cfg_.beacons));
  nn::Tape tape;
  const nn::Seq out =
      nn::forward(graph_, params_, window_to_seq(w, cfg_.input_scale), tape);
  Eigen::MatrixXd translated(w.beacons(), w.length());
  for (int t = 0; t < w.length(); ++t)
    translated.col(t) = out[static_cast<std::size_t>(t)].col(0) / cfg_.input_scale;
  return translated;
}

nn::Seq TransNet::forward_scaled(const nn::Seq& scaled_input, nn::Tape& tape) {
  return nn::forward(graph_, params_, scaled_input, tape);
}

void TransNet::zero_residual_output() {
  const std::size_t last_conv = graph_.size() - 2;  // conv feeding skip_relu
  const std::string base = "l" + std::to_string(last_conv);
  for (const char* what : {".w", ".b"}) {
    nn::Tensor& t = params_.at(base + what);
    std::fill(t.data.begin(), t.data.end(), 0.0);
  }
}

}  // namespace blescope::model
