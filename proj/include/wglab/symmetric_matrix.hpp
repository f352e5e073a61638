#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace wglab {

// Real symmetric n x n matrix stored as its packed upper triangle, row major:
// (0,0) (0,1) ... (0,n-1) (1,1) ... (n-1,n-1).
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(std::size_t n);
  // Takes ownership of a packed upper triangle; throws InvalidParameter if the
  // length is not n(n+1)/2 or any entry is non-finite.
  SymmetricMatrix(std::size_t n, std::vector<double> packed);

  static SymmetricMatrix identity(std::size_t n);
  static std::size_t packed_size(std::size_t n) { return n * (n + 1) / 2; }

  std::size_t order() const noexcept { return n_; }

  // Symmetric accessors; (i, j) and (j, i) address the same entry.
  double operator()(std::size_t i, std::size_t j) const { return entries_[index(i, j)]; }
  double& operator()(std::size_t i, std::size_t j) { return entries_[index(i, j)]; }

  double trace() const;
  // Row-major dense copy, mainly for solvers and tests.
  std::vector<double> to_dense() const;

  std::span<const double> packed() const noexcept { return entries_; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * n_ - i * (i - 1) / 2 + (j - i);
  }

  std::size_t n_;
  std::vector<double> entries_;
};

}  // namespace wglab
