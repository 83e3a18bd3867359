#pragma once

#include <stdexcept>
#include <string>

namespace blescope {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when training or tuning touches test-tagged data.
class DataHygieneError : public Error {
 public:
  explicit DataHygieneError(const std::string& what) : Error(what) {}
};

// Thrown when a loss or gradient goes non-finite mid-training.
class TrainingAborted : public Error {
 public:
  explicit TrainingAborted(const std::string& what) : Error(what) {}
};

}  // namespace blescope
