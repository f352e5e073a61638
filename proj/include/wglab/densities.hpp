#pragma once

#include <cstddef>
#include <limits>

#include "wglab/spectral.hpp"

namespace wglab {

// Eigenvalues below -tol_psd(d) mark a matrix as outside the PSD cone.
inline double tol_psd(double d) { return 1e-8 * d; }

// Log-density of the Wishart W(n, d) at a symmetric matrix with spectrum s,
// w.r.t. Lebesgue measure on the upper triangle. Requires d >= n. Returns
// -infinity when the smallest eigenvalue is not strictly positive.
double log_wishart_density(const Spectrum& s, std::size_t n, std::size_t d);

// Log-density of M(n, d) = sqrt(d) M(n) + d I.
double log_goe_density(const Spectrum& s, std::size_t n, std::size_t d);

// alpha = log(f / g), assembled as sum_i h(lambda_i) + K(n, d).
double alpha_exact(const Spectrum& s, std::size_t n, std::size_t d);

// alpha by direct subtraction of the two log-densities. Independent second
// route used for cross-checks.
double alpha_direct(const Spectrum& s, std::size_t n, std::size_t d);

// Spectrum-independent part of alpha in the centered form.
double alpha_constant(std::size_t n, std::size_t d);

// h(x) = ((d-n-1) log(x/d) - (x-d) + (x-d)^2 / (2d)) / 2
double h_function(double x, std::size_t n, std::size_t d);

struct TaylorCoeffs {
  double h1 = 0.0;
  double h2 = 0.0;
  double h3 = 0.0;
  double h4 = 0.0;
  // Worst case of the fifth-order Lagrange term over the Q window.
  double remainder_bound = 0.0;
};

// Derivatives of h at d. Requires d > 9n.
TaylorCoeffs taylor_coeffs(std::size_t n, std::size_t d);

struct AlphaBreakdown {
  double alpha_exact = -std::numeric_limits<double>::infinity();
  double s0 = 0.0;
  double s1 = std::numeric_limits<double>::quiet_NaN();
  double s2 = std::numeric_limits<double>::quiet_NaN();
  double s3 = std::numeric_limits<double>::quiet_NaN();
  double s4 = std::numeric_limits<double>::quiet_NaN();
  double remainder = std::numeric_limits<double>::quiet_NaN();
  bool in_q = false;
  bool psd = false;

  // s1..s4 and remainder are set only where the Wishart density is positive
  // (smallest eigenvalue > 0), i.e. where alpha is finite.
  bool has_statistics() const noexcept { return alpha_exact > -std::numeric_limits<double>::infinity(); }
};

AlphaBreakdown s_decomposition(const Spectrum& s, std::size_t n, std::size_t d);

// All eigenvalues within [d - 3 sqrt(dn), d + 3 sqrt(dn)].
bool in_q(const Spectrum& s, std::size_t n, std::size_t d);

}  // namespace wglab
