#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace sl2coh {

/// Dense row-major matrix of arbitrary-precision integers.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<mpz_class> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const mpz_class> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<mpz_class> row_vector(std::size_t i) const {
    auto r = row(i);
    return {r.begin(), r.end()};
  }

  IntegerMatrix transpose() const;
  bool is_zero_row(std::size_t i) const;
  void swap_rows(std::size_t a, std::size_t b);
  /// Keeps the first `n` rows.
  IntegerMatrix top_rows(std::size_t n) const;
  void append_row(std::span<const mpz_class> r);

  friend IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
  friend bool operator==(const IntegerMatrix& a, const IntegerMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// One bracketed row per line: "[2 0]\n[0 2]".
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

struct HermiteResult {
  /// Row Hermite normal form: echelon, positive pivots, entries above a pivot in [0, pivot).
  /// Zero rows collect at the bottom.
  IntegerMatrix form;
  /// Unimodular with transform * input == form.
  IntegerMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

/// Row-style Hermite normal form via extended-gcd row operations.
HermiteResult hnf(const IntegerMatrix& a);

/// Nonzero invariant factors d1 | d2 | ... of the Smith normal form, computed by
/// alternating row and column elimination.
std::vector<mpz_class> smith_invariants(const IntegerMatrix& a);

/// Rows form a basis of {v in ZZ^n : a v = 0}; the basis is saturated.
IntegerMatrix integer_kernel(const IntegerMatrix& a);

/// Row-reduced echelon form over ZZ/p (p prime). Entries in [0, p).
struct ModpEchelon {
  IntegerMatrix form;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};
ModpEchelon rref_mod(const IntegerMatrix& a, const mpz_class& p);
std::size_t rank_mod(const IntegerMatrix& a, const mpz_class& p);
/// Rows form a basis of {v in (ZZ/p)^n : a v = 0}, with canonical representatives.
IntegerMatrix kernel_mod(const IntegerMatrix& a, const mpz_class& p);

}  // namespace sl2coh
