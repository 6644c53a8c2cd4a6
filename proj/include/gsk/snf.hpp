#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "gsk/matrix.hpp"

namespace gsk {

using BigInt = mpz_class;
using BigMatrix = Matrix<BigInt>;

/// U * A * V = D with U, V unimodular and D diagonal (same shape as A),
/// positive diagonal entries each dividing the next, zeros last.
struct SNFResult {
  BigMatrix U;
  BigMatrix V;
  BigMatrix D;
  std::vector<BigInt> diagonal;  // min(rows, cols) entries
};

SNFResult smith_normal_form(const BigMatrix& A);

BigMatrix to_big(const Matrix<std::int64_t>& A);
/// Determinant by fraction-free elimination.
BigInt determinant(const BigMatrix& A);

}  // namespace gsk
