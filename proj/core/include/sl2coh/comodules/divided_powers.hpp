#pragma once

#include <map>
#include <utility>
#include <vector>

#include "sl2coh/exactalg/polynomial.hpp"

namespace sl2coh {

/// Sparse linear combination sum_i c_i e_i with polynomial coefficients.
using LinearCombination = std::vector<std::pair<std::size_t, Polynomial>>;

/// Element of the divided-power (or symmetric) algebra on n generators: exponent vector of
/// length n -> coefficient.
using GradedElement = std::map<Exponents, Polynomial>;

/// All exponent vectors of length n and total m, largest first in lex order
/// ((m,0,...,0) comes first).
std::vector<Exponents> multiset_basis(std::size_t n, int m);

/// (sum_i c_i e_i)^[k] = sum_{|mu|=k} prod_i c_i^{mu_i} e^[mu] in Gamma(V).
GradedElement divided_power_of(const LinearCombination& v, std::size_t n, int k,
                               const Polynomial& one);
/// e^[a] e^[b] = prod_i binom(a_i + b_i, a_i) e^[a+b].
GradedElement divided_product(const GradedElement& a, const GradedElement& b);

/// (sum_i c_i x_i)^k with multinomial coefficients, in S(V).
GradedElement symmetric_power_of(const LinearCombination& v, std::size_t n, int k,
                                 const Polynomial& one);
GradedElement symmetric_product(const GradedElement& a, const GradedElement& b);

}  // namespace sl2coh
