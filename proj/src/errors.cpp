#include "wglab/errors.hpp"

#include <cstdio>

namespace wglab {
namespace {

std::string convergence_message(std::size_t order, double residual) {
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "symmetric eigensolver did not converge: order %zu, off-diagonal residual %.3e",
                order, residual);
  return buf;
}

}  // namespace

ConvergenceError::ConvergenceError(std::size_t order, double residual)
    : std::runtime_error(convergence_message(order, residual)), order_(order), residual_(residual) {}

}  // namespace wglab
