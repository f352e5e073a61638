#include "wglab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "wglab/errors.hpp"

namespace wglab {
namespace {

// 15-point Kronrod abscissae (positive half, descending) and weights; the
// 7-point Gauss rule uses every second abscissa.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
};

Segment gauss_kronrod15(const Integrand& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double mean = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - mean);
  for (int j = 0; j < 7; ++j) resasc += kWgk[j] * (std::fabs(f1[j] - mean) + std::fabs(f2[j] - mean));

  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double error = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && error != 0.0) error = resasc * std::min(1.0, std::pow(200.0 * error / resasc, 1.5));
  const double roundoff = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  if (resabs > std::numeric_limits<double>::min() / roundoff) error = std::max(error, roundoff);
  return {a, b, value, error};
}

}  // namespace

QuadResult integrate(const Integrand& f, double a, double b, QuadOptions opts) {
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidParameter("integrate: bounds must be finite");
  QuadResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  std::vector<Segment> segments{gauss_kronrod15(f, a, b)};
  auto by_error = [](const Segment& x, const Segment& y) { return x.error < y.error; };

  for (;;) {
    double value = 0.0;
    double error = 0.0;
    for (const Segment& s : segments) {
      value += s.value;
      error += s.error;
    }
    result.value = value;
    result.abs_error = error;
    result.intervals = static_cast<int>(segments.size());
    if (error <= std::max(opts.abs_tol, opts.rel_tol * std::fabs(value))) {
      result.converged = true;
      return result;
    }
    if (static_cast<int>(segments.size()) >= opts.max_intervals) return result;

    std::pop_heap(segments.begin(), segments.end(), by_error);
    const Segment worst = segments.back();
    segments.pop_back();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
      // interval can no longer be split in floating point
      segments.push_back(worst);
      std::push_heap(segments.begin(), segments.end(), by_error);
      return result;
    }
    segments.push_back(gauss_kronrod15(f, worst.a, mid));
    std::push_heap(segments.begin(), segments.end(), by_error);
    segments.push_back(gauss_kronrod15(f, mid, worst.b));
    std::push_heap(segments.begin(), segments.end(), by_error);
  }
}

QuadResult integrate_to(const Integrand& f, double b, QuadOptions opts) {
  // z = b - (1 - t) / t, dz = dt / t^2, t in (0, 1]
  const Integrand mapped = [&](double t) {
    const double z = b - (1.0 - t) / t;
    return f(z) / (t * t);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

QuadResult integrate_from(const Integrand& f, double a, QuadOptions opts) {
  const Integrand mapped = [&](double t) {
    const double z = a + (1.0 - t) / t;
    return f(z) / (t * t);
  };
  return integrate(mapped, 0.0, 1.0, opts);
}

}  // namespace wglab
