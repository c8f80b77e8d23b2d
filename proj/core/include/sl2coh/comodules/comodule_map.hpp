#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "sl2coh/comodules/comodule.hpp"
#include "sl2coh/exactalg/integer_matrix.hpp"

namespace sl2coh {

/// Sparse column of a map matrix: the image of one source basis vector.
using MapColumn = std::vector<std::pair<std::size_t, mpz_class>>;

/// Linear map between comodules over the same group, stored column by column. Entries are
/// reduced into the base ring. Equivariance is checked on demand (check_equivariant), since
/// the large Gamma targets are lazy.
class ComoduleMap {
 public:
  ComoduleMap(ComodulePtr source, ComodulePtr target, std::vector<MapColumn> columns);

  const ComodulePtr& source() const { return source_; }
  const ComodulePtr& target() const { return target_; }
  const Ring& ring() const { return source_->ring(); }
  const std::vector<MapColumn>& columns() const { return columns_; }
  const MapColumn& column(std::size_t j) const { return columns_.at(j); }
  mpz_class entry(std::size_t i, std::size_t j) const;

  /// Image of a coefficient vector (any polynomials over a common variable list).
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;
  std::vector<mpz_class> apply(const std::vector<mpz_class>& v) const;

  /// Dense target_rank x source_rank matrix; throws InvalidArgument above `max_dim`.
  IntegerMatrix to_matrix(std::size_t max_dim = 1000) const;

 private:
  ComodulePtr source_;
  ComodulePtr target_;
  std::vector<MapColumn> columns_;
};

ComoduleMap identity_map(const ComodulePtr& m);
ComoduleMap zero_map(const ComodulePtr& source, const ComodulePtr& target);
/// g after f.
ComoduleMap compose(const ComoduleMap& g, const ComoduleMap& f);
/// Entries reduced along the ring map; source and target base-changed.
ComoduleMap base_change(const ComoduleMap& f, const Ring& ring);
/// Gamma^m(f): e^[lambda] -> prod_j (f e_j)^[lambda_j].
ComoduleMap div_power_map(const ComoduleMap& f, int m);
/// S^m(f): x^mu -> prod_j (f x_j)^{mu_j}.
ComoduleMap sym_power_map(const ComoduleMap& f, int m);

/// Gamma^{mN} V -> Gamma^m Gamma^N V, dual to multiplication S^m S^N (V^#) -> S^{mN} (V^#):
/// e^[lambda] maps to the sum of e^[kappa] over multisets kappa of m degree-N monomials
/// whose product is x^lambda.
ComoduleMap gamma_composition_map(const ComodulePtr& v, int m, int n);

/// Gamma^{p^s} V -> V^(s) over ZZ/p: e_i^[p^s] -> e_i, mixed divided monomials -> 0.
ComoduleMap twist_projection(const ComodulePtr& vbar, int s);

/// rho_target . f == (f (x) id) . rho_source, on the given source columns (all by default).
/// Throws VerificationFailed naming the first failing entry.
void check_equivariant(const ComoduleMap& f,
                       const std::optional<std::vector<std::size_t>>& source_columns = std::nullopt);

}  // namespace sl2coh
