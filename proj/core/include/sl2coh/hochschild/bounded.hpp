#pragma once

#include <gmpxx.h>

#include <vector>

#include "sl2coh/exactalg/integer_matrix.hpp"
#include "sl2coh/hochschild/cochain.hpp"

namespace sl2coh {

/// Total-degree-d piece of H^n(Ga, F_p) with trivial coefficients. The Ga differential
/// preserves total degree, so this is finite linear algebra on monomials.
struct GradedCohomology {
  mpz_class p;
  int n = 0;
  int d = 0;
  std::size_t cochain_dim = 0;
  std::size_t cocycle_dim = 0;
  std::size_t coboundary_dim = 0;
  std::size_t dimension() const { return cocycle_dim - coboundary_dim; }
  /// Cocycles whose classes form a basis of the graded piece.
  std::vector<Cochain> basis;
};

GradedCohomology bounded_cohomology_Ga(const mpz_class& p, int n, int d);

/// Whether a homogeneous cochain on Ga over F_p with trivial coefficients lies in the
/// image of the differential.
bool is_coboundary_Ga(const Cochain& f);

/// Monomials of total degree d in `nvars` variables, graded-lex descending.
std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d);

}  // namespace sl2coh
