#pragma once

#include <array>
#include <cstddef>

#include "wglab/rng.hpp"
#include "wglab/tv_mc.hpp"

namespace wglab {

// c = lim d / n^3, positive and finite.
struct LimitParams {
  double c = 1.0;

  void validate() const;
};

struct CovMatrix2 {
  double c11 = 0.0;
  double c12 = 0.0;
  double c22 = 0.0;

  bool is_psd() const noexcept { return c11 >= 0.0 && c22 >= 0.0 && c11 * c22 - c12 * c12 >= 0.0; }
};

// Covariance of the Gaussian limit (N1, N3) of (sum mu_i, sum mu_i^3).
inline constexpr CovMatrix2 kCltCovariance{2.0, 6.0, 24.0};

// Erf(1 / (4 sqrt(3) sqrt(c)))
double limiting_tv_closed_form(LimitParams p);

// E[(1 - exp(-1/(12c) + Z/(6 sqrt c)))_+], Z ~ N(0, 6), integrated up to the
// sign change at z = 1 / (2 sqrt c).
double limiting_tv_quadrature(LimitParams p);

// Monte Carlo average of (1 - exp(-1/(12c) - N1/(2 sqrt c) + N3/(6 sqrt c)))_+
// with (N1, N3) drawn as (Y, 3Y + Z), Y ~ N(0, 2), Z ~ N(0, 6).
TvEstimate limiting_tv_mc(LimitParams p, std::size_t samples, RngState rng, McOptions opts = {});

// 1 / (2 sqrt(3 pi) sqrt(c)), the large-c behaviour of the closed form.
double asymptotic_tail(LimitParams p);

struct CltEstimate {
  CovMatrix2 cov;
  double mean1 = 0.0;
  double mean3 = 0.0;
  std::size_t reps = 0;
};

// Empirical covariance of (sum mu_i, sum mu_i^3), mu the spectrum of M(n)/sqrt(n),
// over `reps` independent GOE draws.
CltEstimate clt_covariance_estimate(std::size_t n, std::size_t reps, RngState rng,
                                    McOptions opts = {});

// Limits of (S0, ..., S4): deterministic parts and the coefficients of N1, N3.
struct SLimit {
  std::array<double, 5> deterministic{};  // entries 1 and 3 are zero
  double n1_coeff = 0.0;                  // multiplies N1 in S1
  double n3_coeff = 0.0;                  // multiplies N3 in S3
};

SLimit s_limit_vector(double c);

}  // namespace wglab
