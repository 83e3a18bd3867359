#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace blescope::nn {

// Flat named tensor: the unit of parameter storage and checkpointing.
// Gradients live beside the data so the optimizer sees both.
struct Tensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;
  std::vector<double> grad;

  std::size_t size() const {
    std::size_t n = 1;
    for (std::size_t d : shape) n *= d;
    return n;
  }

  static Tensor zeros(std::vector<std::size_t> shape);

  // 2-D tensors map onto Eigen matrices (column-major, zero copy).
  Eigen::Map<Eigen::MatrixXd> mat();
  Eigen::Map<const Eigen::MatrixXd> mat() const;
  Eigen::Map<Eigen::MatrixXd> grad_mat();

  void zero_grad();
};

}  // namespace blescope::nn
