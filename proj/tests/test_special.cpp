#include <cmath>
#include <numbers>

#include "doctest.h"
#include "wglab/errors.hpp"
#include "wglab/special.hpp"

using wglab::log_gamma;

TEST_CASE("log_gamma at exact points") {
  CHECK(std::fabs(log_gamma(1.0)) < 1e-14);
  CHECK(std::fabs(log_gamma(2.0)) < 1e-14);
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(std::numbers::pi)).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma(10.5) from the half-integer recurrence") {
  long double acc = 0.5L * std::log(std::numbers::pi_v<long double>);
  for (long double x = 0.5L; x < 10.0L; x += 1.0L) acc += std::log(x);
  CHECK(log_gamma(10.5) == doctest::Approx(static_cast<double>(acc)).epsilon(1e-14));
}

TEST_CASE("log_gamma agrees with the C library on a wide grid") {
  for (double z = 0.5; z < 2e6; z *= 1.37) {
    const double ref = static_cast<double>(std::lgamma(static_cast<long double>(z)));
    const double tol = 1e-14 * std::max(1.0, std::fabs(ref));
    CHECK_MESSAGE(std::fabs(log_gamma(z) - ref) <= tol, "z = " << z);
  }
  // both branches agree where they meet
  CHECK(log_gamma(15.0) == doctest::Approx(static_cast<double>(std::lgamma(15.0L))).epsilon(1e-14));
  CHECK(log_gamma(std::nextafter(15.0, 0.0)) ==
        doctest::Approx(static_cast<double>(std::lgamma(15.0L))).epsilon(1e-14));
}

TEST_CASE("recurrence log Gamma(z+1) - log Gamma(z) = log z") {
  for (double z = 0.5; z <= 100.5; z += 1.0) {
    CHECK(std::fabs(log_gamma(z + 1) - log_gamma(z) - std::log(z)) < 8e-15 * (1 + std::fabs(log_gamma(z + 1))));
  }
}

TEST_CASE("stirling remainder") {
  for (double z : {0.5, 1.0, 3.5, 14.9, 15.0, 100.0, 1e5}) {
    const long double zl = z;
    const long double main = (zl - 0.5L) * std::log(zl) - zl + 0.5L * std::log(2 * std::numbers::pi_v<long double>);
    const double ref = static_cast<double>(std::lgamma(zl) - main);
    CHECK_MESSAGE(std::fabs(wglab::stirling_remainder(z) - ref) < 1e-13, "z = " << z);
  }
  // leading term 1/(12 z)
  CHECK(wglab::stirling_remainder(1e6) == doctest::Approx(1.0 / 12e6).epsilon(1e-10));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(log_gamma(0.0), wglab::InvalidParameter);
  CHECK_THROWS_AS(log_gamma(-1.5), wglab::InvalidParameter);
  CHECK_THROWS_AS(wglab::stirling_remainder(0.0), wglab::InvalidParameter);
}
