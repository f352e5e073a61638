#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "wglab/errors.hpp"
#include "wglab/quadrature.hpp"

using namespace wglab;

TEST_CASE("finite intervals") {
  const auto poly = integrate([](double x) { return x * x * x - 2 * x; }, -1, 3);
  CHECK(poly.converged);
  CHECK(poly.value == doctest::Approx(12.0).epsilon(1e-14));

  const auto kink = integrate([](double x) { return std::fabs(x - 0.3); }, 0, 1);
  CHECK(kink.converged);
  CHECK(kink.value == doctest::Approx(0.045 + 0.245).epsilon(1e-11));

  const auto sqrt_edge = integrate([](double x) { return std::sqrt(x); }, 0, 1);
  CHECK(sqrt_edge.value == doctest::Approx(2.0 / 3.0).epsilon(1e-10));

  CHECK(integrate([](double) { return 1.0; }, 2, 2).value == 0.0);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0, INFINITY), InvalidParameter);
}

TEST_CASE("semi-infinite Gaussian tails") {
  auto phi = [](double z) { return std::exp(-z * z / 2) / std::sqrt(2 * std::numbers::pi); };
  for (double b : {-3.0, -0.5, 0.0, 1.0, 4.0}) {
    const double cdf = 0.5 * std::erfc(-b / std::sqrt(2.0));
    CHECK(integrate_to(phi, b).value == doctest::Approx(cdf).epsilon(1e-10));
    CHECK(integrate_from(phi, b).value == doctest::Approx(1 - cdf).epsilon(1e-10));
  }
  const auto expo = integrate_from([](double x) { return std::exp(-x); }, 0.0);
  CHECK(expo.value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("1-D TV oracle for chi-square vs normal reproduces independent values") {
  // scipy.integrate.quad of (g - f 1{x >= 0})_+ split at 0
  CHECK(oracle::tv_chi_square_vs_normal(3) == doctest::Approx(0.2458320814396133).epsilon(1e-9));
  CHECK(oracle::tv_chi_square_vs_normal(10) == doctest::Approx(0.11856705383652431).epsilon(1e-9));
  CHECK(oracle::tv_chi_square_vs_normal(50) == doctest::Approx(0.05084687075238215).epsilon(1e-9));
}
