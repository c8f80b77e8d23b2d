#include "sl2coh/classes/universal.hpp"

#include "sl2coh/classes/witt.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/hochschild/cup.hpp"

namespace sl2coh {

namespace {

int int_power(const mpz_class& p, int e) {
  mpz_class q;
  mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
  if (!q.fits_sint_p()) throw InvalidArgument("parameters too large");
  return static_cast<int>(q.get_si());
}

std::vector<mpz_class> alpha_power_vector(const ComodulePtr& gm, std::size_t base_rank, int k) {
  Exponents e(base_rank, 0);
  e[kEAlpha] = k;
  std::vector<mpz_class> v(gm->rank(), 0);
  v[*gm->index_of_multiset(e)] = 1;
  return v;
}

}  // namespace

void UniversalClassSpec::validate() const {
  if (!is_prime(p)) throw InvalidArgument("p = " + p.get_str() + " is not prime");
  if (r < 1 || j < 0 || m < 1) throw InvalidArgument("need r >= 1, j >= 0, m >= 1");
}

int UniversalClassSpec::degree() const { return 2 * m * int_power(p, r - 1); }
int UniversalClassSpec::inner_power() const { return int_power(p, r + j); }
int UniversalClassSpec::coefficient_power() const { return m * inner_power(); }
mpz_class UniversalClassSpec::coefficient_rank() const {
  return binomial(static_cast<unsigned long>(coefficient_power()) + 3, 3);
}

std::string UniversalClassSpec::to_string() const {
  return "p=" + p.get_str() + " r=" + std::to_string(r) + " j=" + std::to_string(j) + " m=" + std::to_string(m);
}

ComodulePtr root_gl2(const Ring& ring) { return restrict(gl2_conjugation(ring), root_hom(ring)); }

ComodulePtr universal_coefficients(const UniversalClassSpec& s) {
  s.validate();
  return div_power(root_gl2(), s.coefficient_power());
}

ComodulePtr borel_coefficients(const UniversalClassSpec& s) {
  s.validate();
  return div_power(restrict(gl2_conjugation(), borel_xu_hom()), s.coefficient_power());
}

Cochain universal_cochain(const UniversalClassSpec& s) {
  s.validate();
  ComodulePtr coeffs = universal_coefficients(s);
  Cochain c = cup_power(witt_cocycle(s.p, s.j + 1), s.m * int_power(s.p, s.r - 1));
  Cochain v = Cochain::vector(coeffs, alpha_power_vector(coeffs, 4, s.coefficient_power()));
  return cup(c, v, unit_pairing(coeffs));
}

ComoduleMap universal_composition_map(const UniversalClassSpec& s) {
  s.validate();
  return gamma_composition_map(root_gl2(), s.m, s.inner_power());
}

ComoduleMap universal_projection_map(const UniversalClassSpec& s) {
  s.validate();
  return div_power_map(twist_projection(mod_p(root_gl2(), s.p), s.r + s.j), s.m);
}

Cochain project_universal_class(const UniversalClassSpec& s) {
  Cochain pushed = apply_coefficient_map(universal_cochain(s), universal_composition_map(s));
  return apply_coefficient_map(change_ring(pushed, Ring::modulo(s.p)), universal_projection_map(s));
}

Cochain project_universal_class_reduced_first(const UniversalClassSpec& s) {
  const Ring fp = Ring::modulo(s.p);
  Cochain reduced = change_ring(universal_cochain(s), fp);
  Cochain pushed = apply_coefficient_map(reduced, base_change(universal_composition_map(s), fp));
  return apply_coefficient_map(pushed, universal_projection_map(s));
}

Cochain displayed_universal_class(const UniversalClassSpec& s) {
  s.validate();
  const Ring fp = Ring::modulo(s.p);
  Cochain base = ga_two_cochain(phi_frobenius(s.p, s.j), fp);
  Cochain c = cup_power(base, s.m * int_power(s.p, s.r - 1));
  ComodulePtr coeffs = div_power(frobenius_twist(root_gl2(fp), s.r + s.j), s.m);
  Cochain v = Cochain::vector(coeffs, alpha_power_vector(coeffs, 4, s.m));
  return cup(c, v, unit_pairing(coeffs));
}

}  // namespace sl2coh
