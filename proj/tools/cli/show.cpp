#include "show.hpp"

#include <algorithm>

#include "sl2coh/classes/universal.hpp"
#include "sl2coh/classes/witt.hpp"
#include "sl2coh/pairlat/pairing_diagram.hpp"

namespace sl2coh::cli {

namespace {

using harness::ConfigError;

void require_prime(int p) {
  if (p < 2 || !is_prime(p)) throw ConfigError("--p " + std::to_string(p) + " is not prime");
}

void require_r(int r) {
  if (r < 1) throw ConfigError("--r must be at least 1");
}

// Witt polynomials beyond this degree are refused by show c.
constexpr unsigned long kMaxWittDegree = 4096;
// past this p^r the rank C(p^r + 3, 3) is over every cap anyway
constexpr unsigned long kRankGuard = 1000;

mpz_class prime_power(int p, int r) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), mpz_class(p).get_mpz_t(), static_cast<unsigned long>(r));
  return q;
}

mpz_class x_rank(int p, int r) {
  mpz_class q = prime_power(p, r);
  return q > kRankGuard ? q : binomial(q.get_ui() + 3, 3);
}

void require_matrix_cap(int p, int r, const harness::Caps& caps) {
  mpz_class n = x_rank(p, r);
  if (n > caps.matrix_dim)
    throw ConfigError("matrix dimension " + n.get_str() + " exceeds cap " + std::to_string(caps.matrix_dim));
}

UniversalClassSpec universal_spec(const ShowArgs& a, const harness::Caps& caps) {
  require_prime(a.p);
  require_r(a.r);
  if (a.j < 0 || a.m < 1) throw ConfigError("need j >= 0 and m >= 1");
  UniversalClassSpec s{a.p, a.r, a.j, a.m};
  if (s.degree() > caps.cup_degree)
    throw ConfigError("cup degree " + std::to_string(s.degree()) + " exceeds cap " + std::to_string(caps.cup_degree));
  if (s.coefficient_rank() > caps.coefficient_rank)
    throw ConfigError("coefficient rank " + s.coefficient_rank().get_str() + " exceeds cap " +
                      std::to_string(caps.coefficient_rank));
  return s;
}

}  // namespace

const std::vector<std::string>& show_selectors() {
  static const std::vector<std::string> s{"phi",     "c",       "cup",     "universal", "projected",
                                          "gl2",     "X-map",   "K-basis", "Y-basis",   "Y-reduction",
                                          "lemma"};
  return s;
}

std::string show(const std::string& selector, const ShowArgs& a, const harness::Caps& caps) {
  if (selector == "phi") {
    require_prime(a.p);
    return phi(a.p).to_string();
  }
  if (selector == "c") {
    require_prime(a.p);
    require_r(a.r);
    if (prime_power(a.p, a.r) > kMaxWittDegree)
      throw ConfigError("p^r exceeds " + std::to_string(kMaxWittDegree));
    return witt_polynomial(a.p, a.r).to_string();
  }
  if (selector == "cup") {
    require_prime(a.p);
    require_r(a.r);
    if (a.m < 1 || 2 * a.m > caps.cup_degree)
      throw ConfigError("cup degree " + std::to_string(2 * a.m) + " outside 2.." + std::to_string(caps.cup_degree));
    return cup_power(a.p, a.r, a.m).component(0).to_string();
  }
  if (selector == "universal") return universal_cochain(universal_spec(a, caps)).to_string();
  if (selector == "projected") return project_universal_class(universal_spec(a, caps)).to_string();
  if (selector == "gl2") return gl2_conjugation()->to_string();
  if (selector == "lemma") {
    std::vector<mpz_class> v(4);
    v[kEAlpha] = 1;
    return generated_subcomodule(gl2_conjugation(), v).lattice.basis().to_string();
  }
  if (selector == "X-map" || selector == "K-basis" || selector == "Y-basis" || selector == "Y-reduction") {
    require_prime(a.p);
    require_r(a.r);
    require_matrix_cap(a.p, a.r, caps);
    if (selector == "X-map") return build_X_map(a.p, a.r).to_matrix(caps.matrix_dim).to_string();
    PairingLattices d = pairing_lattices(a.p, a.r);
    if (selector == "K-basis") return d.k.basis().to_string();
    if (selector == "Y-basis") return d.y.basis().to_string();
    return d.y_reduction.to_matrix(caps.matrix_dim).to_string();
  }
  std::string known;
  for (const auto& s : show_selectors()) known += (known.empty() ? "" : ", ") + s;
  throw ConfigError("unknown selector '" + selector + "' (known: " + known + ")");
}

}  // namespace sl2coh::cli
