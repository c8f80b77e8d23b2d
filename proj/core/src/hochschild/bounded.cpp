#include "sl2coh/hochschild/bounded.hpp"

#include "sl2coh/comodules/divided_powers.hpp"
#include "sl2coh/errors.hpp"

namespace sl2coh {

std::vector<Exponents> monomials_of_degree(std::size_t nvars, int d) {
  if (d < 0) return {};
  if (nvars == 0) return d == 0 ? std::vector<Exponents>{Exponents{}} : std::vector<Exponents>{};
  return multiset_basis(nvars, d);
}

namespace {

struct GradedPiece {
  ComodulePtr k;
  std::vector<Exponents> monomials;
};

GradedPiece piece(const GroupPtr& ga, int n, int d) {
  return {trivial_comodule(ga), monomials_of_degree(static_cast<std::size_t>(n), d)};
}

/// Matrix of d: C^n_d -> C^{n+1}_d, rows indexed by target monomials.
IntegerMatrix differential_matrix(const GroupPtr& ga, int n, int d) {
  GradedPiece src = piece(ga, n, d), tgt = piece(ga, n + 1, d);
  IntegerMatrix m(tgt.monomials.size(), src.monomials.size());
  if (n < 0) return m;
  for (std::size_t c = 0; c < src.monomials.size(); ++c) {
    Polynomial x = Polynomial::monomial(ga->copies(n), ga->ring(), src.monomials[c]);
    Cochain dx = differential(Cochain(src.k, n, {x}));
    for (std::size_t r = 0; r < tgt.monomials.size(); ++r) m(r, c) = dx.component(0).coefficient(tgt.monomials[r]);
  }
  return m;
}

GroupPtr ga_mod(const mpz_class& p) {
  if (!is_prime(p)) throw InvalidArgument("bounded cohomology needs a prime, got " + p.get_str());
  return make_group(GroupKind::Ga, Ring::modulo(p));
}

}  // namespace

GradedCohomology bounded_cohomology_Ga(const mpz_class& p, int n, int d) {
  if (n < 0 || d < 0) throw InvalidArgument("bounded cohomology needs n, d >= 0");
  GroupPtr ga = ga_mod(p);
  GradedCohomology h;
  h.p = p;
  h.n = n;
  h.d = d;
  std::vector<Exponents> monomials = monomials_of_degree(static_cast<std::size_t>(n), d);
  h.cochain_dim = monomials.size();
  IntegerMatrix dn = differential_matrix(ga, n, d);
  IntegerMatrix cocycles = kernel_mod(dn, p);
  h.cocycle_dim = cocycles.rows();
  IntegerMatrix boundaries = n > 0 ? differential_matrix(ga, n - 1, d).transpose() : IntegerMatrix(0, monomials.size());
  h.coboundary_dim = rank_mod(boundaries, p);

  std::size_t current = h.coboundary_dim;
  IntegerMatrix span = boundaries;
  ComodulePtr k = trivial_comodule(ga);
  for (std::size_t r = 0; r < cocycles.rows(); ++r) {
    IntegerMatrix trial = span;
    trial.append_row(cocycles.row(r));
    std::size_t rank = rank_mod(trial, p);
    if (rank == current) continue;
    current = rank;
    span = std::move(trial);
    Polynomial f(ga->copies(n), ga->ring());
    for (std::size_t c = 0; c < monomials.size(); ++c) f.add_term(monomials[c], cocycles(r, c));
    h.basis.push_back(Cochain(k, n, {f}));
  }
  return h;
}

bool is_coboundary_Ga(const Cochain& f) {
  if (f.group()->kind() != GroupKind::Ga || f.coefficients()->rank() != 1 || f.ring().is_integers() ||
      !f.params()->empty())
    throw InvalidArgument("is_coboundary_Ga expects a parameter-free cochain on Ga over F_p with trivial coefficients");
  const Polynomial& c = f.component(0);
  if (c.is_zero()) return true;
  const int d = c.total_degree();
  if (!c.is_homogeneous(d)) throw InvalidArgument("is_coboundary_Ga expects a homogeneous cochain");
  const int n = f.degree();
  if (n == 0) return false;
  const mpz_class& p = f.ring().modulus();
  IntegerMatrix boundaries = differential_matrix(f.group(), n - 1, d).transpose();
  std::vector<Exponents> monomials = monomials_of_degree(static_cast<std::size_t>(n), d);
  std::vector<mpz_class> row;
  for (const auto& e : monomials) row.push_back(c.coefficient(e));
  const std::size_t before = rank_mod(boundaries, p);
  boundaries.append_row(row);
  return rank_mod(boundaries, p) == before;
}

}  // namespace sl2coh
