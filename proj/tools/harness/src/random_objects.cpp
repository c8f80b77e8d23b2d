#include "sl2coh/harness/random_objects.hpp"

namespace sl2coh::harness {

Polynomial random_polynomial(Rng& rng, const VarsPtr& vars, const Ring& ring, int max_exp, int terms) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial f(vars, ring);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars->size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int lo = (*vars)[i].laurent ? -max_exp : 0;
      e[i] = std::uniform_int_distribution<int>(lo, max_exp)(rng);
    }
    f.add_term(e, coeff(rng));
  }
  return f;
}

Cochain random_cochain(Rng& rng, const ComodulePtr& m, int degree, int max_exp, int terms) {
  const GroupScheme& g = *m->group();
  VarsPtr vars = g.copies(degree);
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < m->rank(); ++i)
    comps.push_back(random_polynomial(rng, vars, m->ring(), max_exp, terms));
  return Cochain(m, degree, comps);
}

IntegerMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) a(i, j) = d(rng);
  return a;
}

}  // namespace sl2coh::harness
