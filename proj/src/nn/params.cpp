#include "blescope/nn/params.hpp"

#include "blescope/core/error.hpp"

namespace blescope::nn {

Tensor& ModelParams::add(const std::string& name, std::vector<std::size_t> shape) {
  if (tensors_.count(name) != 0) throw Error("duplicate parameter tensor: " + name);
  names_.push_back(name);
  auto [it, _] = tensors_.emplace(name, Tensor::zeros(std::move(shape)));
  AdamSlot slot;
  slot.m.assign(it->second.size(), 0.0);
  slot.v.assign(it->second.size(), 0.0);
  adam_.emplace(name, std::move(slot));
  return it->second;
}

Tensor& ModelParams::at(const std::string& name) {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw Error("unknown parameter tensor: " + name);
  return it->second;
}

const Tensor& ModelParams::at(const std::string& name) const {
  auto it = tensors_.find(name);
  if (it == tensors_.end()) throw Error("unknown parameter tensor: " + name);
  return it->second;
}

AdamSlot& ModelParams::adam_slot(const std::string& name) {
  auto it = adam_.find(name);
  if (it == adam_.end()) throw Error("no Adam state for tensor: " + name);
  return it->second;
}

void ModelParams::zero_grads() {
  for (auto& name : names_) tensors_.at(name).zero_grad();
}

void ModelParams::reset_adam() {
  for (auto& [name, slot] : adam_) {
    std::fill(slot.m.begin(), slot.m.end(), 0.0);
    std::fill(slot.v.begin(), slot.v.end(), 0.0);
  }
  step_ = 0;
}

std::size_t ModelParams::total_parameters() const {
  std::size_t n = 0;
  for (const auto& name : names_) n += tensors_.at(name).size();
  return n;
}

}  // namespace blescope::nn
