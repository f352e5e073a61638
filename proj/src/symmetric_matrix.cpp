#include "wglab/symmetric_matrix.hpp"

#include <cmath>
#include <string>

#include "wglab/errors.hpp"
#include "wglab/summation.hpp"

namespace wglab {

SymmetricMatrix::SymmetricMatrix(std::size_t n) : n_(n), entries_(packed_size(n), 0.0) {
  if (n == 0) throw InvalidParameter("SymmetricMatrix: order must be positive");
}

SymmetricMatrix::SymmetricMatrix(std::size_t n, std::vector<double> packed)
    : n_(n), entries_(std::move(packed)) {
  if (n == 0) throw InvalidParameter("SymmetricMatrix: order must be positive");
  if (entries_.size() != packed_size(n)) {
    throw InvalidParameter("SymmetricMatrix: expected " + std::to_string(packed_size(n)) +
                           " packed entries, got " + std::to_string(entries_.size()));
  }
  for (double x : entries_) {
    if (!std::isfinite(x)) throw InvalidParameter("SymmetricMatrix: non-finite entry");
  }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t n) {
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double SymmetricMatrix::trace() const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < n_; ++i) acc.add((*this)(i, i));
  return acc.value();
}

std::vector<double> SymmetricMatrix::to_dense() const {
  std::vector<double> dense(n_ * n_);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const double v = (*this)(i, j);
      dense[i * n_ + j] = v;
      dense[j * n_ + i] = v;
    }
  }
  return dense;
}

}  // namespace wglab
