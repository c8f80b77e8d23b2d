#pragma once

#include <random>

#include "sl2coh/exactalg/integer_matrix.hpp"
#include "sl2coh/hochschild/cochain.hpp"

namespace sl2coh::harness {

using Rng = std::mt19937_64;

/// `terms` random monomials with exponents in [0, max_exp] ([-max_exp, max_exp] on Laurent
/// variables) and coefficients in [-3, 3].
Polynomial random_polynomial(Rng& rng, const VarsPtr& vars, const Ring& ring, int max_exp, int terms);
Cochain random_cochain(Rng& rng, const ComodulePtr& m, int degree, int max_exp = 2, int terms = 3);
/// Entries in [-bound, bound].
IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound);

}  // namespace sl2coh::harness
