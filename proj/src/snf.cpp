#include "gsk/snf.hpp"

#include <utility>

namespace gsk {

namespace {

struct Work {
  BigMatrix D, U, V;
  std::size_t m, n;

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(D(a, j), D(b, j));
    for (std::size_t j = 0; j < m; ++j) std::swap(U(a, j), U(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m; ++i) std::swap(D(i, a), D(i, b));
    for (std::size_t i = 0; i < n; ++i) std::swap(V(i, a), V(i, b));
  }
  // row a += q * row b
  void add_row(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t j = 0; j < n; ++j) D(a, j) += q * D(b, j);
    for (std::size_t j = 0; j < m; ++j) U(a, j) += q * U(b, j);
  }
  // col a += q * col b
  void add_col(std::size_t a, std::size_t b, const BigInt& q) {
    for (std::size_t i = 0; i < m; ++i) D(i, a) += q * D(i, b);
    for (std::size_t i = 0; i < n; ++i) V(i, a) += q * V(i, b);
  }
  void negate_row(std::size_t a) {
    for (std::size_t j = 0; j < n; ++j) D(a, j) = -D(a, j);
    for (std::size_t j = 0; j < m; ++j) U(a, j) = -U(a, j);
  }

  // Smallest nonzero |entry| in the trailing block from (t, t); false if none.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    BigInt best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j) {
        if (sgn(D(i, j)) == 0) continue;
        BigInt a = abs(D(i, j));
        if (!found || a < best) {
          best = a;
          pi = i;
          pj = j;
          found = true;
        }
      }
    return found;
  }

  // Clears row and column t with quotients; true if every remainder was zero.
  bool eliminate(std::size_t t) {
    bool clean = true;
    BigInt q;
    for (std::size_t i = t + 1; i < m; ++i) {
      if (sgn(D(i, t)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
      add_row(i, t, -q);
      if (sgn(D(i, t)) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < n; ++j) {
      if (sgn(D(t, j)) == 0) continue;
      mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
      add_col(j, t, -q);
      if (sgn(D(t, j)) != 0) clean = false;
    }
    return clean;
  }

  // Index of a row whose trailing entries are not all divisible by the pivot.
  bool find_indivisible(std::size_t t, std::size_t& row) const {
    for (std::size_t i = t + 1; i < m; ++i)
      for (std::size_t j = t + 1; j < n; ++j)
        if (!mpz_divisible_p(D(i, j).get_mpz_t(), D(t, t).get_mpz_t())) {
          row = i;
          return true;
        }
    return false;
  }
};

}  // namespace

SNFResult smith_normal_form(const BigMatrix& A) {
  Work w{A, BigMatrix::identity(A.rows()), BigMatrix::identity(A.cols()), A.rows(), A.cols()};
  const std::size_t steps = std::min(w.m, w.n);
  for (std::size_t t = 0; t < steps; ++t) {
    std::size_t pi = 0, pj = 0;
    if (!w.find_pivot(t, pi, pj)) break;
    while (true) {
      w.find_pivot(t, pi, pj);
      w.swap_rows(t, pi);
      w.swap_cols(t, pj);
      if (!w.eliminate(t)) continue;
      std::size_t bad = 0;
      if (w.find_indivisible(t, bad)) {
        w.add_row(t, bad, BigInt(1));
        continue;
      }
      break;
    }
    if (sgn(w.D(t, t)) < 0) w.negate_row(t);
  }

  SNFResult r{std::move(w.U), std::move(w.V), std::move(w.D), {}};
  for (std::size_t t = 0; t < steps; ++t) r.diagonal.push_back(r.D(t, t));
  return r;
}

BigMatrix to_big(const Matrix<std::int64_t>& A) {
  BigMatrix B(A.rows(), A.cols());
  for (std::size_t i = 0; i < A.rows(); ++i)
    for (std::size_t j = 0; j < A.cols(); ++j) B(i, j) = BigInt(static_cast<long>(A(i, j)));
  return B;
}

BigInt determinant(const BigMatrix& A) {
  if (A.rows() != A.cols()) throw InvalidArgument("determinant of a non-square matrix");
  const std::size_t n = A.rows();
  if (n == 0) return 1;
  BigMatrix M = A;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(M(k, k)) == 0) {
      std::size_t r = k + 1;
      while (r < n && sgn(M(r, k)) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(M(k, j), M(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = M(i, j) * M(k, k) - M(i, k) * M(k, j);
        mpz_divexact(M(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = M(k, k);
  }
  return sign * M(n - 1, n - 1);
}

}  // namespace gsk
