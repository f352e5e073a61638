#include "wglab/ensembles.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "wglab/errors.hpp"
#include "wglab/summation.hpp"

namespace wglab {

void EnsembleParams::validate() const {
  if (n == 0) throw InvalidParameter("matrix order n must be >= 1");
  if (d == 0) throw InvalidParameter("degrees of freedom d must be >= 1");
}

void EnsembleParams::validate_for_density() const {
  validate();
  if (d < n) {
    throw InvalidParameter("Wishart density requires d >= n (n=" + std::to_string(n) +
                           ", d=" + std::to_string(d) + ")");
  }
}

SymmetricMatrix sample_goe(std::size_t n, RandomStream& rng) {
  if (n == 0) throw InvalidParameter("sample_goe: n must be >= 1");
  SymmetricMatrix m(n);
  const double diag_scale = std::sqrt(2.0);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = diag_scale * rng.normal();
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rng.normal();
  }
  return m;
}

SymmetricMatrix shift_scale_goe(const SymmetricMatrix& m, std::size_t d) {
  if (d == 0) throw InvalidParameter("shift_scale_goe: d must be >= 1");
  const std::size_t n = m.order();
  const double dd = static_cast<double>(d);
  const double scale = std::sqrt(dd);
  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = scale * m(i, i) + dd;
    for (std::size_t j = i + 1; j < n; ++j) out(i, j) = scale * m(i, j);
  }
  return out;
}

SymmetricMatrix sample_wishart(std::size_t n, std::size_t d, RandomStream& rng) {
  EnsembleParams{n, d}.validate();
  // X is n x d, row major; rows are filled in order so the draw sequence is fixed.
  std::vector<double> x(n * d);
  for (double& v : x) v = rng.normal();

  SymmetricMatrix w(n);
  const bool compensated = d > kCompensatedGramThreshold;
  for (std::size_t i = 0; i < n; ++i) {
    const double* xi = x.data() + i * d;
    for (std::size_t j = i; j < n; ++j) {
      const double* xj = x.data() + j * d;
      if (compensated) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < d; ++k) acc.add(xi[k] * xj[k]);
        w(i, j) = acc.value();
      } else {
        double acc = 0.0;
        for (std::size_t k = 0; k < d; ++k) acc += xi[k] * xj[k];
        w(i, j) = acc;
      }
    }
  }
  return w;
}

}  // namespace wglab
