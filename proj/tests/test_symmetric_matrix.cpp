#include <cmath>
#include <limits>

#include "doctest.h"
#include "wglab/errors.hpp"
#include "wglab/symmetric_matrix.hpp"

using wglab::SymmetricMatrix;

TEST_CASE("packed layout is the row-major upper triangle") {
  SymmetricMatrix m(3, {1, 2, 3, 4, 5, 6});
  CHECK(m(0, 0) == 1);
  CHECK(m(0, 1) == 2);
  CHECK(m(0, 2) == 3);
  CHECK(m(1, 1) == 4);
  CHECK(m(1, 2) == 5);
  CHECK(m(2, 2) == 6);
  CHECK(m(2, 0) == m(0, 2));
  CHECK(m(2, 1) == m(1, 2));
  CHECK(m.trace() == 11);
}

TEST_CASE("dense reconstruction is exactly symmetric") {
  SymmetricMatrix m(4);
  double v = 0.25;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i; j < 4; ++j) m(i, j) = (v *= -1.7);
  const auto dense = m.to_dense();
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(dense[i * 4 + j] == dense[j * 4 + i]);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(SymmetricMatrix(0), wglab::InvalidParameter);
  CHECK_THROWS_AS(SymmetricMatrix(3, {1, 2, 3}), wglab::InvalidParameter);
  CHECK_THROWS_AS(SymmetricMatrix(1, {std::numeric_limits<double>::quiet_NaN()}), wglab::InvalidParameter);
  CHECK_THROWS_AS(SymmetricMatrix(1, {std::numeric_limits<double>::infinity()}), wglab::InvalidParameter);
}

TEST_CASE("identity") {
  const auto id = SymmetricMatrix::identity(5);
  CHECK(id.trace() == 5);
  CHECK(id(1, 3) == 0);
  CHECK(SymmetricMatrix::packed_size(5) == 15);
}
