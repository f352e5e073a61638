#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "wglab/errors.hpp"
#include "wglab/limit_theory.hpp"
#include "wglab/parallel.hpp"

using namespace wglab;

namespace {

double erf_oracle_at(double c) {
  return static_cast<double>(oracle::erf_ld(1.0L / (4.0L * std::sqrt(3.0L) * std::sqrt(static_cast<long double>(c)))));
}

}  // namespace

TEST_CASE("closed form against the series / continued-fraction erf") {
  CHECK(limiting_tv_closed_form({1.0 / 48}) == doctest::Approx(0.8427007929497149).epsilon(1e-12));
  CHECK(static_cast<double>(oracle::erf_ld(1.0L)) == doctest::Approx(0.8427007929497149).epsilon(1e-15));
  CHECK(limiting_tv_closed_form({1.0}) == doctest::Approx(0.1617).epsilon(1e-3));
  for (double c : {1e-4, 0.01, 1.0 / 48, 0.1, 0.5, 1.0, 10.0, 100.0, 1e4}) {
    CHECK_MESSAGE(limiting_tv_closed_form({c}) == doctest::Approx(erf_oracle_at(c)).epsilon(1e-12), "c = " << c);
  }
  CHECK(limiting_tv_closed_form({1e14}) < 1e-7);
  CHECK(limiting_tv_closed_form({1e-6}) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("closed form is a strictly decreasing map into (0, 1)") {
  double prev = 1.0;
  for (int k = 0; k < 100; ++k) {
    const double c = std::pow(10.0, -3 + 6.0 * k / 99);
    const double v = limiting_tv_closed_form({c});
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("quadrature reproduces the closed form") {
  for (double c : {0.01, 0.1, 1.0 / 48, 0.5, 1.0, 10.0, 100.0}) {
    CHECK_MESSAGE(std::fabs(limiting_tv_quadrature({c}) - limiting_tv_closed_form({c})) <= 1e-9, "c = " << c);
  }
  CHECK(limiting_tv_quadrature({100.0}) < 0.03);
}

TEST_CASE("Monte Carlo limit functional") {
  for (double c : {1.0, 1.0 / 48}) {
    const auto est = limiting_tv_mc({c}, 1000000, RngState{static_cast<std::uint64_t>(1 / c), 0});
    CHECK_MESSAGE(std::fabs(est.mean - limiting_tv_closed_form({c})) <= 3 * est.std_error, "c = " << c);
  }
  const auto one = limiting_tv_mc({1.0}, 1, RngState{5, 0});
  CHECK(one.mean >= 0.0);
  CHECK(one.mean <= 1.0);
  CHECK(one.std_error == 0.0);
  const auto a = limiting_tv_mc({0.3}, 5000, RngState{5, 0}, McOptions{1});
  const auto b = limiting_tv_mc({0.3}, 5000, RngState{5, 0}, McOptions{4});
  CHECK(a.mean == b.mean);
}

TEST_CASE("Y/Z decoupling: the Z-only functional agrees with the (N1, N3) functional") {
  for (double c : {0.05, 1.0, 10.0}) {
    const std::size_t samples = 400000;
    RandomStream rng(RngState{77, 1});
    const double root_c = std::sqrt(c);
    double sum = 0, sum2 = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      const double z = std::sqrt(6.0) * rng.normal();
      const double v = goe_side_integrand(-1 / (12 * c) + z / (6 * root_c));
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
    const auto full = limiting_tv_mc({c}, samples, RngState{78, 0});
    CHECK_MESSAGE(std::fabs(mean - full.mean) <= 3 * (se + full.std_error), "c = " << c);
  }
}

TEST_CASE("three-way agreement on the reference grid") {
  for (double c : {0.01, 0.1, 1.0 / 48, 0.5, 1.0, 10.0, 100.0}) {
    const double closed = limiting_tv_closed_form({c});
    CHECK(std::fabs(closed - limiting_tv_quadrature({c})) <= 1e-9);
    const auto mc = limiting_tv_mc({c}, 1000000, RngState{11, static_cast<std::uint64_t>(c * 1000)});
    CHECK_MESSAGE(std::fabs(closed - mc.mean) <= 3 * mc.std_error, "c = " << c);
  }
}

TEST_CASE("large-c asymptote") {
  CHECK(asymptotic_tail({1.0}) == doctest::Approx(1 / (2 * std::sqrt(3 * std::numbers::pi))).epsilon(1e-15));
  CHECK(asymptotic_tail({1.0}) == doctest::Approx(0.1628).epsilon(1e-3));
  CHECK(asymptotic_tail({4 * 2.5}) == doctest::Approx(asymptotic_tail({2.5}) / 2).epsilon(1e-15));
  const double ratio = limiting_tv_closed_form({1000.0}) / asymptotic_tail({1000.0});
  CHECK(ratio <= 1.0);
  CHECK(ratio >= 0.98);
  double prev_gap = 1.0;
  for (double c : {1.0, 10.0, 100.0, 1000.0, 1e4}) {
    const double gap = 1 - limiting_tv_closed_form({c}) / asymptotic_tail({c});
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
}

TEST_CASE("limits of the S statistics") {
  const auto s = s_limit_vector(1.0);
  CHECK(s.deterministic[0] == doctest::Approx(-1.0 / 12));
  CHECK(s.deterministic[1] == 0.0);
  CHECK(s.deterministic[2] == doctest::Approx(0.25));
  CHECK(s.deterministic[3] == 0.0);
  CHECK(s.deterministic[4] == doctest::Approx(-0.25));
  CHECK(s.n1_coeff == doctest::Approx(-0.5));
  CHECK(s.n3_coeff == doctest::Approx(1.0 / 6));
  for (double c : {0.001, 0.3, 7.0}) {
    const auto v = s_limit_vector(c);
    CHECK(v.deterministic[2] + v.deterministic[4] == 0.0);
  }

  SUBCASE("functional with these coefficients reproduces Erf(1) at c = 1/48") {
    const auto v = s_limit_vector(1.0 / 48);
    RandomStream rng(RngState{48, 0});
    const std::size_t samples = 1000000;
    double sum = 0, sum2 = 0;
    for (std::size_t i = 0; i < samples; ++i) {
      // (N1, N3) from the Cholesky factor of [[2, 6], [6, 24]]
      const double g1 = rng.normal(), g2 = rng.normal();
      const double n1 = std::sqrt(2.0) * g1;
      const double n3 = 3 * std::sqrt(2.0) * g1 + std::sqrt(6.0) * g2;
      const double exponent = v.deterministic[0] + v.n1_coeff * n1 + v.deterministic[2] + v.n3_coeff * n3 +
                              v.deterministic[4];
      const double val = goe_side_integrand(exponent);
      sum += val;
      sum2 += val * val;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum2 / samples - mean * mean) / samples);
    CHECK(std::fabs(mean - std::erf(1.0)) <= 3 * se);
  }
}

TEST_CASE("CLT covariance of the first and third spectral power sums") {
  const auto est = clt_covariance_estimate(100, 10000, RngState{100, 0});
  CHECK(est.reps == 10000);
  CHECK(est.cov.is_psd());
  CHECK(est.cov.c11 == doctest::Approx(2.0).epsilon(0.10));
  CHECK(est.cov.c12 == doctest::Approx(6.0).epsilon(0.15));
  CHECK(est.cov.c22 == doctest::Approx(24.0).epsilon(0.15));
  // mean zero by sign symmetry
  CHECK(std::fabs(est.mean1) <= 4 * std::sqrt(est.cov.c11 / est.reps));
  CHECK(std::fabs(est.mean3) <= 4 * std::sqrt(est.cov.c22 / est.reps));
}

TEST_CASE("CLT covariance approaches C as n grows") {
  // Cov(tr M, tr M^3) / n^2 = 6 + 6/n exactly for GOE (Wick pairing), so the
  // cross term converges from above at rate 1/n; the diagonal entry is 2 at
  // every n.
  const std::size_t reps = 100000;
  double prev_gap12 = 1e9;
  for (std::size_t n : {4u, 8u, 16u}) {
    const auto est = clt_covariance_estimate(n, reps, RngState{n, 5});
    const double se11 = std::sqrt(2 * est.cov.c11 * est.cov.c11 / reps);
    const double se12 = std::sqrt((est.cov.c11 * est.cov.c22 + est.cov.c12 * est.cov.c12) / reps);
    CHECK_MESSAGE(std::fabs(est.cov.c11 - 2.0) <= 4 * se11, "n = " << n);
    CHECK_MESSAGE(std::fabs(est.cov.c12 - (6.0 + 6.0 / n)) <= 4 * se12, "n = " << n);
    const double gap12 = est.cov.c12 - 6.0;
    CHECK(gap12 < prev_gap12);
    prev_gap12 = gap12;
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(limiting_tv_closed_form({0.0}), InvalidParameter);
  CHECK_THROWS_AS(limiting_tv_closed_form({-1.0}), InvalidParameter);
  CHECK_THROWS_AS(limiting_tv_quadrature({0.0}), InvalidParameter);
  CHECK_THROWS_AS(limiting_tv_mc({1.0}, 0, RngState{}), InvalidParameter);
  CHECK_THROWS_AS(limiting_tv_mc({INFINITY}, 10, RngState{}), InvalidParameter);
  CHECK_THROWS_AS(clt_covariance_estimate(1, 10, RngState{}), InvalidParameter);
  CHECK_THROWS_AS(clt_covariance_estimate(5, 1, RngState{}), InvalidParameter);
  CHECK_THROWS_AS(s_limit_vector(0.0), InvalidParameter);
}
