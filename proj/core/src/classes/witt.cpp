#include "sl2coh/classes/witt.hpp"

#include "sl2coh/errors.hpp"

namespace sl2coh {

namespace {

const Ring ZZ = Ring::integers();

unsigned long prime_power(const mpz_class& p, int e) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  if (!q.fits_ulong_p()) throw InvalidArgument("prime power too large");
  return q.get_ui();
}

void require_prime(const mpz_class& p) {
  if (!is_prime(p)) throw InvalidArgument(p.get_str() + " is not prime");
}

Polynomial xy(std::size_t i) { return Polynomial::variable(xy_vars(), ZZ, i); }

}  // namespace

VarsPtr xy_vars() {
  static const VarsPtr vars = make_vars({{"X", false}, {"Y", false}});
  return vars;
}

Polynomial phi(const mpz_class& p) {
  require_prime(p);
  const unsigned long e = p.get_ui();
  return exact_div_scalar((xy(0) + xy(1)).pow(e) - xy(0).pow(e) - xy(1).pow(e), p);
}

Polynomial phi_frobenius(const mpz_class& p, int s) {
  const unsigned long q = prime_power(p, s);
  std::vector<Polynomial> values{xy(0).pow(q), xy(1).pow(q)};
  return substitute(phi(p), values, xy_vars());
}

Polynomial witt_polynomial(const mpz_class& p, int r) {
  require_prime(p);
  if (r < 1) throw InvalidArgument("witt cocycle needs r >= 1");
  const unsigned long q = prime_power(p, r);
  return exact_div_scalar((xy(0) + xy(1)).pow(q) - xy(0).pow(q) - xy(1).pow(q), p);
}

Cochain ga_two_cochain(const Polynomial& f_xy, const Ring& ring) {
  GroupPtr ga = make_group(GroupKind::Ga, ring);
  const std::vector<int> ident{0, 1};
  Polynomial f = remap(change_ring(f_xy, ring), ga->copies(2), ident);
  return Cochain(trivial_comodule(ga), 2, {f});
}

Cochain ga_power_cochain(unsigned long k) {
  GroupPtr ga = make_group(GroupKind::Ga);
  return Cochain(trivial_comodule(ga), 1, {Polynomial::variable(ga->copies(1), ZZ, 0).pow(k)});
}

Polynomial as_xy(const Cochain& f) {
  if (f.degree() != 2 || f.coefficients()->rank() != 1 || f.group()->kind() != GroupKind::Ga)
    throw InvalidArgument("as_xy expects a scalar 2-cochain on Ga");
  const std::vector<int> ident{0, 1};
  return remap(f.component(0), xy_vars(), ident);
}

Cochain witt_cocycle(const mpz_class& p, int r) { return ga_two_cochain(witt_polynomial(p, r)); }

bool check_congruence_p2(const mpz_class& p, int r) {
  require_prime(p);
  if (r < 1) throw InvalidArgument("congruence needs r >= 1");
  const unsigned long q = prime_power(p, r);
  Polynomial diff = (xy(0) + xy(1)).pow(q) - xy(0).pow(q) - xy(1).pow(q) - phi_frobenius(p, r - 1).scaled(p);
  return reduce_mod(diff, p * p).is_zero();
}

Cochain cup_power(const Cochain& f, int m) {
  if (m < 1) throw InvalidArgument("cup power needs m >= 1");
  if (f.coefficients()->rank() != 1 || f.coefficients()->descriptor() != "trivial")
    throw InvalidArgument("cup_power expects trivial coefficients");
  Pairing mult = trivial_pairing(f.group());
  Cochain out = f;
  for (int k = 1; k < m; ++k) out = cup(out, f, mult);
  return out;
}

Cochain cup_power(const mpz_class& p, int r, int m) { return cup_power(witt_cocycle(p, r), m); }

}  // namespace sl2coh
