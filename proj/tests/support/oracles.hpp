#pragma once

#include <gmpxx.h>

#include <cstdlib>

#include "sl2coh/exactalg/integer_matrix.hpp"

namespace oracle {

using sl2coh::IntegerMatrix;

inline void subtract_multiple(IntegerMatrix& a, std::size_t target, std::size_t source, const mpz_class& q) {
  for (std::size_t j = 0; j < a.cols(); ++j) a(target, j) -= q * a(source, j);
}

// Textbook row HNF by repeated division with remainder on one column at a time.
inline IntegerMatrix naive_hnf(IntegerMatrix a) {
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    while (true) {
      std::size_t best = a.rows();
      for (std::size_t i = row; i < a.rows(); ++i)
        if (a(i, col) != 0 && (best == a.rows() || abs(a(i, col)) < abs(a(best, col)))) best = i;
      if (best == a.rows()) break;
      a.swap_rows(row, best);
      bool done = true;
      for (std::size_t i = row + 1; i < a.rows(); ++i) {
        if (a(i, col) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), a(i, col).get_mpz_t(), a(row, col).get_mpz_t());
        subtract_multiple(a, i, row, q);
        if (a(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (row >= a.rows() || a(row, col) == 0) continue;
    if (a(row, col) < 0)
      for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
    for (std::size_t s = 0; s < row; ++s) {
      mpz_class q;
      mpz_fdiv_q(q.get_mpz_t(), a(s, col).get_mpz_t(), a(row, col).get_mpz_t());
      subtract_multiple(a, s, row, q);
    }
    ++row;
  }
  return a;
}

// Laplace expansion along the first row.
inline mpz_class cofactor_determinant(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  mpz_class det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (a(0, c) == 0) continue;
    IntegerMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = a(i, j);
    mpz_class term = a(0, c) * cofactor_determinant(minor);
    det += (c % 2 == 0) ? term : mpz_class(-term);
  }
  return det;
}

}  // namespace oracle
