#include "wglab/densities.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wglab/ensembles.hpp"
#include "wglab/errors.hpp"
#include "wglab/special.hpp"
#include "wglab/summation.hpp"

namespace wglab {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void check_order(const Spectrum& s, std::size_t n) {
  if (s.n != n || s.eigenvalues.size() != n) {
    throw InvalidParameter("spectrum has order " + std::to_string(s.n) + ", expected " +
                           std::to_string(n));
  }
}

}  // namespace

double log_wishart_density(const Spectrum& s, std::size_t n, std::size_t d) {
  EnsembleParams{n, d}.validate_for_density();
  check_order(s, n);
  if (!(s.min() > 0.0)) return kNegInf;

  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const double log_coeff = 0.5 * (dd - nn - 1.0);
  CompensatedSum acc;
  for (double lambda : s.eigenvalues) {
    acc.add(log_coeff * std::log(lambda));
    acc.add(-0.5 * lambda);
  }
  acc.add(-0.5 * dd * nn * std::numbers::ln2);
  acc.add(-0.25 * nn * (nn - 1.0) * std::log(std::numbers::pi));
  for (std::size_t i = 1; i <= n; ++i) {
    acc.add(-log_gamma(0.5 * (dd + 1.0 - static_cast<double>(i))));
  }
  return acc.value();
}

double log_goe_density(const Spectrum& s, std::size_t n, std::size_t d) {
  EnsembleParams{n, d}.validate();
  check_order(s, n);
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  CompensatedSum acc;
  for (double lambda : s.eigenvalues) {
    const double x = lambda - dd;
    acc.add(-x * x / (4.0 * dd));
  }
  acc.add(-0.25 * nn * (nn + 1.0) * std::log(2.0 * std::numbers::pi * dd));
  acc.add(-0.5 * nn * std::numbers::ln2);
  return acc.value();
}

double alpha_direct(const Spectrum& s, std::size_t n, std::size_t d) {
  const double log_f = log_wishart_density(s, n, d);
  if (log_f == kNegInf) return kNegInf;
  return log_f - log_goe_density(s, n, d);
}

// With z_i = (d + 1 - i) / 2 and log Gamma(z_i) split into its Stirling main
// part and remainder, every log(d) and log(2) contribution cancels across the
// sum over i, leaving O(1) terms:
//   K = sum_i [ (1 - i)/2 - ((d - i)/2) log1p((1 - i)/d) - r(z_i) ].
double alpha_constant(std::size_t n, std::size_t d) {
  EnsembleParams{n, d}.validate_for_density();
  const double dd = static_cast<double>(d);
  CompensatedSum acc;
  for (std::size_t i = 1; i <= n; ++i) {
    const double im1 = static_cast<double>(i) - 1.0;
    acc.add(-0.5 * im1);
    acc.add(-0.5 * (dd - im1 - 1.0) * std::log1p(-im1 / dd));
    acc.add(-stirling_remainder(0.5 * (dd - im1)));
  }
  return acc.value();
}

double h_function(double x, std::size_t n, std::size_t d) {
  const double dd = static_cast<double>(d);
  const double t = x - dd;
  const double coeff = dd - static_cast<double>(n) - 1.0;
  return 0.5 * (coeff * std::log1p(t / dd) - t + t * t / (2.0 * dd));
}

double alpha_exact(const Spectrum& s, std::size_t n, std::size_t d) {
  EnsembleParams{n, d}.validate_for_density();
  check_order(s, n);
  if (!(s.min() > 0.0)) return kNegInf;
  CompensatedSum acc;
  for (double lambda : s.eigenvalues) acc.add(h_function(lambda, n, d));
  acc.add(alpha_constant(n, d));
  return acc.value();
}

TaylorCoeffs taylor_coeffs(std::size_t n, std::size_t d) {
  if (n == 0 || d <= 9 * n) {
    throw InvalidParameter("taylor_coeffs: requires n >= 1 and d > 9n (n=" + std::to_string(n) +
                           ", d=" + std::to_string(d) + ")");
  }
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);
  const double m = dd - nn - 1.0;
  TaylorCoeffs t;
  t.h1 = -(nn + 1.0) / (2.0 * dd);
  t.h2 = (nn + 1.0) / (2.0 * dd * dd);
  t.h3 = m / (dd * dd * dd);
  t.h4 = -3.0 * m / (dd * dd * dd * dd);
  const double half_width = 3.0 * std::sqrt(dd * nn);
  t.remainder_bound = m / (10.0 * std::pow(dd - half_width, 5)) * std::pow(half_width, 5);
  return t;
}

bool in_q(const Spectrum& s, std::size_t n, std::size_t d) {
  const double dd = static_cast<double>(d);
  const double half_width = 3.0 * std::sqrt(dd * static_cast<double>(n));
  return s.min() >= dd - half_width && s.max() <= dd + half_width;
}

AlphaBreakdown s_decomposition(const Spectrum& s, std::size_t n, std::size_t d) {
  EnsembleParams{n, d}.validate_for_density();
  check_order(s, n);
  const double nn = static_cast<double>(n);
  const double dd = static_cast<double>(d);

  AlphaBreakdown b;
  b.s0 = -nn * nn * nn / (12.0 * dd);
  b.in_q = in_q(s, n, d);
  b.psd = s.min() >= -tol_psd(dd);
  b.alpha_exact = alpha_exact(s, n, d);
  if (!b.has_statistics()) return b;

  const auto sums = centered_power_sums(s, dd, 4);
  const double m = dd - nn - 1.0;
  b.s1 = -(nn + 1.0) / (2.0 * dd) * sums[0];
  b.s2 = (nn + 1.0) / (4.0 * dd * dd) * sums[1];
  b.s3 = m / (6.0 * dd * dd * dd) * sums[2];
  b.s4 = -m / (8.0 * dd * dd * dd * dd) * sums[3];
  b.remainder = b.alpha_exact - (b.s0 + b.s1 + b.s2 + b.s3 + b.s4);
  return b;
}

}  // namespace wglab
