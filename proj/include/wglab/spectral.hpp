#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wglab/symmetric_matrix.hpp"

namespace wglab {

// Eigenvalues in ascending order.
struct Spectrum {
  std::size_t n = 0;
  std::vector<double> eigenvalues;

  double min() const { return eigenvalues.front(); }
  double max() const { return eigenvalues.back(); }
};

// mu_i = (lambda_i - d) / sqrt(d n).
struct NormalizedSpectrum {
  std::size_t n = 0;
  double d = 0.0;
  std::vector<double> mu;
};

// Householder tridiagonalization followed by implicit-shift QL.
// Throws ConvergenceError if an eigenvalue fails to deflate within 30 sweeps.
Spectrum symmetric_eigenvalues(const SymmetricMatrix& a);

// Same, for a spectrum already known (sorts a copy and validates).
Spectrum make_spectrum(std::vector<double> eigenvalues);

// [sum_i (lambda_i - d)^k for k = 1..k_max], Neumaier-compensated.
std::vector<double> centered_power_sums(const Spectrum& s, double d, int k_max);

NormalizedSpectrum normalize_spectrum(const Spectrum& s, std::size_t n, double d);

// (1/n) sum_i mu_i^k
double empirical_moment(const NormalizedSpectrum& ns, int k);

// k-th moment of the semicircle law on [-2, 2]: zero for odd k, the Catalan
// number C_{k/2} for even k.
double semicircle_moment(int k);

// Exact Catalan number; throws InvalidParameter once the value overflows 64 bits.
std::uint64_t catalan_number(int m);

}  // namespace wglab
