#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "blescope/nn/tensor.hpp"

namespace blescope::nn {

// Adam first/second moment buffers for one tensor.
struct AdamSlot {
  std::vector<double> m;
  std::vector<double> v;
};

// Named parameter store. Iteration follows insertion order so optimizer
// steps and checkpoints are deterministic.
class ModelParams {
 public:
  Tensor& add(const std::string& name, std::vector<std::size_t> shape);

  Tensor& at(const std::string& name);
  const Tensor& at(const std::string& name) const;
  bool contains(const std::string& name) const { return tensors_.count(name) != 0; }

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

  AdamSlot& adam_slot(const std::string& name);
  std::int64_t step() const { return step_; }
  void set_step(std::int64_t s) { step_ = s; }

  void zero_grads();
  // Clears moments and step count (used when an optimizer phase restarts).
  void reset_adam();
  std::size_t total_parameters() const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Tensor> tensors_;
  std::map<std::string, AdamSlot> adam_;
  std::int64_t step_ = 0;
};

}  // namespace blescope::nn
