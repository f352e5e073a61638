#include "wglab/special.hpp"

#include <cmath>
#include <numbers>

#include "wglab/errors.hpp"

namespace wglab {
namespace {

constexpr double kStirlingCutoff = 15.0;
const double kHalfLog2Pi = 0.5 * std::log(2.0 * std::numbers::pi);

// sum_{k=1}^{6} B_{2k} / (2k (2k-1) z^{2k-1})
double stirling_series(double z) {
  const double inv = 1.0 / z;
  const double inv2 = inv * inv;
  // Horner form in 1/z^2, from the B_12 term down to B_2.
  double acc = -691.0 / 360360.0;
  acc = acc * inv2 + 1.0 / 1188.0;
  acc = acc * inv2 - 1.0 / 1680.0;
  acc = acc * inv2 + 1.0 / 1260.0;
  acc = acc * inv2 - 1.0 / 360.0;
  acc = acc * inv2 + 1.0 / 12.0;
  return acc * inv;
}

double stirling_main(double z) { return (z - 0.5) * std::log(z) - z + kHalfLog2Pi; }

}  // namespace

double log_gamma(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw InvalidParameter("log_gamma: argument must be positive and finite");
  if (z >= kStirlingCutoff) return stirling_main(z) + stirling_series(z);
  // Gamma(z) = Gamma(z + k) / (z (z+1) ... (z+k-1)) with z + k >= cutoff.
  double shifted = z;
  double product = 1.0;
  while (shifted < kStirlingCutoff) {
    product *= shifted;
    shifted += 1.0;
  }
  return stirling_main(shifted) + stirling_series(shifted) - std::log(product);
}

double stirling_remainder(double z) {
  if (!(z > 0.0) || !std::isfinite(z)) throw InvalidParameter("stirling_remainder: argument must be positive and finite");
  if (z >= kStirlingCutoff) return stirling_series(z);
  return log_gamma(z) - stirling_main(z);
}

}  // namespace wglab
