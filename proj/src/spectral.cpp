#include "wglab/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wglab/errors.hpp"
#include "wglab/summation.hpp"

namespace wglab {
namespace {

constexpr int kMaxSweeps = 30;

// Householder reduction of a dense symmetric matrix (row major, lower
// triangle referenced) to tridiagonal form. On return diag holds the diagonal
// and off[i] the (i, i-1) entry, off[0] = 0.
void tridiagonalize(std::vector<double>& a, std::size_t n, std::vector<double>& diag,
                    std::vector<double>& off) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (std::size_t k = 0; k <= l; ++k) scale += std::fabs(at(i, k));
      if (scale == 0.0) {
        off[i] = at(i, l);
      } else {
        for (std::size_t k = 0; k <= l; ++k) {
          at(i, k) /= scale;
          h += at(i, k) * at(i, k);
        }
        double f = at(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        off[i] = scale * g;
        h -= f * g;
        at(i, l) = f - g;
        f = 0.0;
        for (std::size_t j = 0; j <= l; ++j) {
          g = 0.0;
          for (std::size_t k = 0; k <= j; ++k) g += at(j, k) * at(i, k);
          for (std::size_t k = j + 1; k <= l; ++k) g += at(k, j) * at(i, k);
          off[j] = g / h;
          f += off[j] * at(i, j);
        }
        const double hh = f / (h + h);
        for (std::size_t j = 0; j <= l; ++j) {
          f = at(i, j);
          g = off[j] - hh * f;
          off[j] = g;
          for (std::size_t k = 0; k <= j; ++k) at(j, k) -= f * off[k] + g * at(i, k);
        }
      }
    } else {
      off[i] = at(i, l);
    }
  }
  off[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) diag[i] = at(i, i);
}

// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal matrix.
// diag is overwritten with the eigenvalues (unordered).
void tridiagonal_ql(std::vector<double>& diag, std::vector<double>& off, std::size_t n) {
  for (std::size_t i = 1; i < n; ++i) off[i - 1] = off[i];
  off[n - 1] = 0.0;
  const double eps = std::numeric_limits<double>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    std::size_t m;
    do {
      for (m = l; m + 1 < n; ++m) {
        const double dd = std::fabs(diag[m]) + std::fabs(diag[m + 1]);
        if (std::fabs(off[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (sweeps++ == kMaxSweeps) throw ConvergenceError(n, std::fabs(off[l]));

      double g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
      double r = std::hypot(g, 1.0);
      g = diag[m] - diag[l] + off[l] / (g + std::copysign(r, g));
      double s = 1.0;
      double c = 1.0;
      double p = 0.0;
      bool underflow = false;
      for (std::size_t i = m; i-- > l;) {
        const double f = s * off[i];
        const double b = c * off[i];
        r = std::hypot(f, g);
        off[i + 1] = r;
        if (r == 0.0) {
          diag[i + 1] -= p;
          off[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[i + 1] - p;
        r = (diag[i] - g) * s + 2.0 * c * b;
        p = s * r;
        diag[i + 1] = g + p;
        g = c * r - b;
      }
      if (underflow) continue;
      diag[l] -= p;
      off[l] = g;
      off[m] = 0.0;
    } while (true);
  }
}

}  // namespace

Spectrum symmetric_eigenvalues(const SymmetricMatrix& a) {
  const std::size_t n = a.order();
  for (double x : a.packed()) {
    if (!std::isfinite(x)) throw InvalidParameter("symmetric_eigenvalues: non-finite entry");
  }
  Spectrum s;
  s.n = n;
  if (n == 1) {
    s.eigenvalues = {a(0, 0)};
    return s;
  }
  std::vector<double> dense = a.to_dense();
  std::vector<double> diag(n);
  std::vector<double> off(n);
  tridiagonalize(dense, n, diag, off);
  tridiagonal_ql(diag, off, n);
  std::sort(diag.begin(), diag.end());
  s.eigenvalues = std::move(diag);
  return s;
}

Spectrum make_spectrum(std::vector<double> eigenvalues) {
  if (eigenvalues.empty()) throw InvalidParameter("make_spectrum: empty spectrum");
  for (double x : eigenvalues) {
    if (!std::isfinite(x)) throw InvalidParameter("make_spectrum: non-finite eigenvalue");
  }
  std::sort(eigenvalues.begin(), eigenvalues.end());
  Spectrum s;
  s.n = eigenvalues.size();
  s.eigenvalues = std::move(eigenvalues);
  return s;
}

std::vector<double> centered_power_sums(const Spectrum& s, double d, int k_max) {
  if (k_max < 1) throw InvalidParameter("centered_power_sums: k_max must be >= 1");
  std::vector<CompensatedSum> acc(static_cast<std::size_t>(k_max));
  for (double lambda : s.eigenvalues) {
    const double x = lambda - d;
    double power = 1.0;
    for (auto& a : acc) {
      power *= x;
      a.add(power);
    }
  }
  std::vector<double> out;
  out.reserve(acc.size());
  for (const auto& a : acc) out.push_back(a.value());
  return out;
}

NormalizedSpectrum normalize_spectrum(const Spectrum& s, std::size_t n, double d) {
  if (!(d >= 1.0)) throw InvalidParameter("normalize_spectrum: d must be >= 1");
  if (n != s.n) throw InvalidParameter("normalize_spectrum: n does not match the spectrum");
  NormalizedSpectrum ns;
  ns.n = n;
  ns.d = d;
  const double scale = std::sqrt(d * static_cast<double>(n));
  ns.mu.reserve(n);
  for (double lambda : s.eigenvalues) ns.mu.push_back((lambda - d) / scale);
  return ns;
}

double empirical_moment(const NormalizedSpectrum& ns, int k) {
  if (k < 1) throw InvalidParameter("empirical_moment: k must be >= 1");
  CompensatedSum acc;
  for (double mu : ns.mu) acc.add(std::pow(mu, k));
  return acc.value() / static_cast<double>(ns.mu.size());
}

std::uint64_t catalan_number(int m) {
  if (m < 0) throw InvalidParameter("catalan_number: index must be >= 0");
  // C_{j+1} = C_j * 2(2j+1) / (j+2); the division is exact. Past C_33 the
  // intermediate product overflows 64 bits.
  if (m > 33) throw InvalidParameter("catalan_number: index too large for 64-bit arithmetic");
  std::uint64_t c = 1;
  for (int j = 0; j < m; ++j) {
    c = c * static_cast<std::uint64_t>(2 * (2 * j + 1)) / static_cast<std::uint64_t>(j + 2);
  }
  return c;
}

double semicircle_moment(int k) {
  if (k < 0) throw InvalidParameter("semicircle_moment: k must be >= 0");
  if (k % 2 != 0) return 0.0;
  return static_cast<double>(catalan_number(k / 2));
}

}  // namespace wglab
