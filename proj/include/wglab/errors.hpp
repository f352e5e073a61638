#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wglab {

// Raised when an operation is called with parameters outside its domain
// (n = 0, d < n for the Wishart density, c <= 0, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The QL iteration did not deflate within the sweep cap.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(std::size_t order, double residual);

  std::size_t order() const noexcept { return order_; }
  double residual() const noexcept { return residual_; }

 private:
  std::size_t order_;
  double residual_;
};

// Malformed experiment configuration or CLI input.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wglab
