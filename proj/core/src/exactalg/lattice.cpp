#include "sl2coh/exactalg/lattice.hpp"

#include "sl2coh/errors.hpp"
#include "sl2coh/exactalg/scalar.hpp"

namespace sl2coh {

IntegerLattice IntegerLattice::from_generators(const IntegerMatrix& generators) {
  IntegerLattice lat(generators.cols());
  HermiteResult h = hnf(generators);
  lat.basis_ = h.form.top_rows(h.rank);
  lat.pivots_ = h.pivot_columns;
  return lat;
}

IntegerLattice IntegerLattice::full(std::size_t n) {
  return from_generators(IntegerMatrix::identity(n));
}

std::optional<std::vector<mpz_class>> IntegerLattice::coordinates(
    std::span<const mpz_class> v) const {
  if (v.size() != ambient_) throw ShapeMismatch("lattice membership: vector length mismatch");
  std::vector<mpz_class> rest(v.begin(), v.end());
  std::vector<mpz_class> coords(rank());
  std::size_t col = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::size_t pc = pivots_[i];
    for (; col < pc; ++col)
      if (rest[col] != 0) return std::nullopt;
    const mpz_class& piv = basis_(i, pc);
    if (!mpz_divisible_p(rest[pc].get_mpz_t(), piv.get_mpz_t())) return std::nullopt;
    mpz_divexact(coords[i].get_mpz_t(), rest[pc].get_mpz_t(), piv.get_mpz_t());
    for (std::size_t j = pc; j < ambient_; ++j)
      mpz_submul(rest[j].get_mpz_t(), coords[i].get_mpz_t(), basis_(i, j).get_mpz_t());
    col = pc + 1;
  }
  for (; col < ambient_; ++col)
    if (rest[col] != 0) return std::nullopt;
  return coords;
}

bool IntegerLattice::contains(std::span<const mpz_class> v) const {
  return coordinates(v).has_value();
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.rank(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

mpz_class IntegerLattice::index() const {
  if (!is_full_rank()) throw InvalidArgument("index of a lattice that is not of full rank");
  mpz_class prod = 1;
  for (std::size_t i = 0; i < rank(); ++i) prod *= basis_(i, i);
  return prod;
}

IntegerLattice lattice_preimage_mod(const IntegerMatrix& a, const mpz_class& p) {
  const std::size_t n = a.cols();
  IntegerMatrix gens = kernel_mod(a, p);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<mpz_class> row(n);
    row[i] = p;
    gens.append_row(row);
  }
  return IntegerLattice::from_generators(gens);
}

IntegerLattice saturation(const IntegerMatrix& generators) {
  const std::size_t n = generators.cols();
  IntegerMatrix normals = integer_kernel(generators);
  if (normals.rows() == 0) return IntegerLattice::full(n);
  return IntegerLattice::from_generators(integer_kernel(normals));
}

}  // namespace sl2coh
