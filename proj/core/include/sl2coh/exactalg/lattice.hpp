#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <vector>

#include "sl2coh/exactalg/integer_matrix.hpp"

namespace sl2coh {

/// A sublattice of ZZ^n, stored as the nonzero rows of a row Hermite normal form.
class IntegerLattice {
 public:
  explicit IntegerLattice(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  /// Lattice spanned by the rows of `generators`.
  static IntegerLattice from_generators(const IntegerMatrix& generators);
  static IntegerLattice full(std::size_t n);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  bool is_full_rank() const { return rank() == ambient_; }
  const IntegerMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

  bool contains(std::span<const mpz_class> v) const;
  bool contains(const IntegerLattice& other) const;
  /// Coefficients c with v == sum_i c_i basis_i, if v lies in the lattice.
  std::optional<std::vector<mpz_class>> coordinates(std::span<const mpz_class> v) const;
  /// [ZZ^n : L]; requires full rank.
  mpz_class index() const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  IntegerMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v in ZZ^n : a v == 0 mod p} for a k x n integer matrix `a` and prime p.
IntegerLattice lattice_preimage_mod(const IntegerMatrix& a, const mpz_class& p);

/// Saturation of the span of the rows: (QQ-span) intersected with ZZ^n.
IntegerLattice saturation(const IntegerMatrix& generators);

}  // namespace sl2coh
