#pragma once

#include <cstddef>

#include "wglab/rng.hpp"
#include "wglab/symmetric_matrix.hpp"

namespace wglab {

struct EnsembleParams {
  std::size_t n = 1;  // matrix order
  std::size_t d = 1;  // degrees of freedom

  // Throws InvalidParameter unless n >= 1 and d >= 1.
  void validate() const;
  // Additionally requires d >= n, the range where the Wishart density exists.
  void validate_for_density() const;
};

// GOE M(n): diagonal N(0, 2), strict upper triangle N(0, 1), all independent.
SymmetricMatrix sample_goe(std::size_t n, RandomStream& rng);

// M(n, d) = sqrt(d) * m + d * I.
SymmetricMatrix shift_scale_goe(const SymmetricMatrix& m, std::size_t d);

// W(n, d) = X X^T for an n x d matrix X of i.i.d. standard normals.
SymmetricMatrix sample_wishart(std::size_t n, std::size_t d, RandomStream& rng);

// Above this many degrees of freedom the Gram entries are accumulated with
// compensated summation.
inline constexpr std::size_t kCompensatedGramThreshold = 100000;

}  // namespace wglab
