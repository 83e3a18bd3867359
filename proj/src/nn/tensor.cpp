#include "blescope/nn/tensor.hpp"

#include "blescope/core/error.hpp"

namespace blescope::nn {

Tensor Tensor::zeros(std::vector<std::size_t> shape) {
  Tensor t;
  t.shape = std::move(shape);
  t.data.assign(t.size(), 0.0);
  t.grad.assign(t.size(), 0.0);
  return t;
}

static std::pair<Eigen::Index, Eigen::Index> matrix_dims(const Tensor& t) {
  if (t.shape.size() == 1) return {static_cast<Eigen::Index>(t.shape[0]), 1};
  if (t.shape.size() == 2)
    return {static_cast<Eigen::Index>(t.shape[0]), static_cast<Eigen::Index>(t.shape[1])};
  throw Error("Tensor::mat requires rank 1 or 2, got rank " + std::to_string(t.shape.size()));
}

Eigen::Map<Eigen::MatrixXd> Tensor::mat() {
  auto [r, c] = matrix_dims(*this);
  return {data.data(), r, c};
}

Eigen::Map<const Eigen::MatrixXd> Tensor::mat() const {
  auto [r, c] = matrix_dims(*this);
  return {data.data(), r, c};
}

Eigen::Map<Eigen::MatrixXd> Tensor::grad_mat() {
  auto [r, c] = matrix_dims(*this);
  return {grad.data(), r, c};
}

void Tensor::zero_grad() { grad.assign(size(), 0.0); }

}  // namespace blescope::nn
