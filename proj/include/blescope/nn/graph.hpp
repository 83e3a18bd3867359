#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "blescope/nn/params.hpp"
#include "blescope/nn/rng.hpp"

namespace blescope::nn {

using Mat = Eigen::MatrixXd;

// Time-major sequence tensor: one (features x batch) slice per time step.
// Non-sequential data is a Seq of length 1.
using Seq = std::vector<Mat>;

enum class LayerKind { kDense, kLstm, kConv1d, kRelu, kTakeLast, kSkipRelu };

struct LayerSpec {
  LayerKind kind = LayerKind::kRelu;
  int in_dim = 0;   // dense fan-in | lstm input size | conv1d in-channels
  int out_dim = 0;  // dense fan-out | lstm hidden size | conv1d out-channels
  int kernel = 3;   // conv1d only; must be odd (same padding)

  static LayerSpec dense(int in, int out) { return {LayerKind::kDense, in, out, 0}; }
  static LayerSpec lstm(int in, int hidden) { return {LayerKind::kLstm, in, hidden, 0}; }
  static LayerSpec conv1d(int in_ch, int out_ch, int kernel = 3) {
    return {LayerKind::kConv1d, in_ch, out_ch, kernel};
  }
  static LayerSpec relu() { return {LayerKind::kRelu, 0, 0, 0}; }
  static LayerSpec take_last() { return {LayerKind::kTakeLast, 0, 0, 0}; }
  // y_t = relu(x_t + graph_input_t); requires stack output shape == input shape.
  static LayerSpec skip_relu() { return {LayerKind::kSkipRelu, 0, 0, 0}; }
};

using Graph = std::vector<LayerSpec>;

std::string layer_kind_name(LayerKind k);

// Creates the named parameter tensors for every layer in `g`.
// Dense/conv weights are Xavier-uniform, LSTM weights uniform(+-1/sqrt(fan_in)),
// all biases zero. Draw order is fixed by layer order and tensor layout.
void init_graph_params(const Graph& g, ModelParams& params, Rng& rng,
                       const std::string& prefix = "");

// Per-layer values recorded by forward() for exact reverse-mode gradients.
struct LayerContext {
  Seq input;
  Seq output;
  // LSTM internals, one entry per time step.
  std::vector<Mat> gate_i, gate_f, gate_g, gate_o, cell, cell_tanh;
};

struct Tape {
  const Graph* graph = nullptr;
  ModelParams* params = nullptr;
  std::string prefix;
  Seq input;
  std::vector<LayerContext> ctx;
};

// Runs the graph on `input`, recording everything backward() needs.
Seq forward(const Graph& g, ModelParams& params, const Seq& input, Tape& tape,
            const std::string& prefix = "");

// Accumulates parameter gradients into tape.params and returns the gradient
// with respect to the graph input. `output_grad` must match the forward
// output shape.
Seq backward(Tape& tape, const Seq& output_grad);

}  // namespace blescope::nn
