#pragma once

#include <functional>

namespace wglab {

struct QuadResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
  bool converged = false;
};

struct QuadOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-12;
  int max_intervals = 2000;
};

using Integrand = std::function<double(double)>;

// Globally adaptive Gauss-Kronrod (7/15) on [a, b]; the interval with the
// largest error estimate is bisected until the total estimate meets the
// tolerance.
QuadResult integrate(const Integrand& f, double a, double b, QuadOptions opts = {});

// Integral over (-inf, b] via z = b - (1 - t) / t, t in (0, 1].
QuadResult integrate_to(const Integrand& f, double b, QuadOptions opts = {});

// Integral over [a, +inf) via z = a + (1 - t) / t, t in (0, 1].
QuadResult integrate_from(const Integrand& f, double a, QuadOptions opts = {});

}  // namespace wglab
