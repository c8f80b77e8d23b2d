#include "sl2coh/hochschild/torus.hpp"

#include "sl2coh/errors.hpp"
#include "sl2coh/groupschemes/group_hom.hpp"

namespace sl2coh {

namespace {

void require_root_cochain(const Cochain& f) {
  if (f.group()->kind() != GroupKind::Ga)
    throw InvalidArgument("expected a cochain on the root subgroup, got one on " + f.group()->name());
  if (!f.coefficients()->weights())
    throw InvalidArgument("coefficients " + f.coefficients()->descriptor() + " are not T-structured");
}

Polynomial power_of(const VarsPtr& vars, const Ring& ring, std::size_t index, int e) {
  Exponents ex(vars->size(), 0);
  ex[index] = e;
  return Polynomial::monomial(vars, ring, ex);
}

}  // namespace

Cochain torus_act(const Cochain& f, const std::string& param) {
  require_root_cochain(f);
  for (const auto& v : *f.vars())
    if (v.name == param) throw InvalidArgument("parameter name " + param + " already in use");
  VariableList params = *f.params();
  params.push_back({param, true});
  VarsPtr newparams = make_vars(params);
  const int n = f.degree();
  VarsPtr target = cochain_vars(*f.group(), n, newparams);
  const std::size_t u = target->size() - 1;
  const Ring& ring = f.ring();
  const Polynomial scale = power_of(target, ring, u, -torus_weight_of_root());
  std::vector<Polynomial> values;
  for (int k = 0; k < n; ++k) values.push_back(scale * Polynomial::variable(target, ring, k));
  for (std::size_t q = 0; q + 1 < newparams->size(); ++q)
    values.push_back(Polynomial::variable(target, ring, n + q));
  const auto& weights = *f.coefficients()->weights();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < f.components().size(); ++i) {
    Polynomial c = substitute(f.component(i), values, target);
    comps.push_back(c.is_zero() ? c : c * power_of(target, ring, u, weights[i]));
  }
  return Cochain(f.coefficients(), n, std::move(comps), newparams);
}

bool is_T_invariant(const Cochain& f) {
  std::string name = "u";
  auto taken = [&](const std::string& s) {
    for (const auto& v : *f.vars())
      if (v.name == s) return true;
    return false;
  };
  while (taken(name)) name += "'";
  Cochain moved = torus_act(f, name);
  return moved == with_params(f, moved.params());
}

Cochain restrict_to_root(const Cochain& fb, const ComodulePtr& root_coeffs) {
  if (fb.group()->kind() != GroupKind::BorelXU)
    throw InvalidArgument("restrict_to_root expects a cochain on B in (x, u) coordinates");
  const int n = fb.degree();
  VarsPtr target = cochain_vars(*root_coeffs->group(), n, fb.params());
  const Ring& ring = fb.ring();
  std::vector<Polynomial> values;
  for (int k = 0; k < n; ++k) {
    values.push_back(Polynomial::variable(target, ring, k));
    values.push_back(Polynomial::constant(target, ring, 1));
  }
  for (std::size_t q = 0; q < fb.params()->size(); ++q)
    values.push_back(Polynomial::variable(target, ring, n + q));
  std::vector<Polynomial> comps;
  for (const auto& c : fb.components()) comps.push_back(substitute(c, values, target));
  return Cochain(root_coeffs, n, std::move(comps), fb.params());
}

Cochain extend_to_borel(const Cochain& f, const ComodulePtr& borel_coeffs) {
  require_root_cochain(f);
  const GroupScheme& b = *borel_coeffs->group();
  if (b.kind() != GroupKind::BorelXU)
    throw InvalidArgument("extend_to_borel needs coefficients over B in (x, u) coordinates");
  if (borel_coeffs->ring() != f.ring()) throw RingMismatch("extend_to_borel: base rings differ");
  if (borel_coeffs->rank() != f.coefficients()->rank())
    throw ShapeMismatch("extend_to_borel: coefficient ranks differ");
  ComodulePtr back = restrict(borel_coeffs, root_into_borel(f.ring()));
  for (std::size_t j = 0; j < f.components().size(); ++j) {
    if (f.component(j).is_zero()) continue;
    if (back->column(j) != f.coefficients()->column(j))
      throw ShapeMismatch("extend_to_borel: B-coefficients do not restrict to the given ones at " +
                          f.coefficients()->labels()[j]);
  }
  if (!is_T_invariant(f)) throw InvalidArgument("extend_to_borel: cochain is not T-invariant");
  if (!is_cocycle(f)) throw InvalidArgument("extend_to_borel: cochain is not a cocycle");

  const int n = f.degree();
  const Ring& ring = f.ring();
  VarsPtr target = cochain_vars(b, n, f.params());
  const int w = torus_weight_of_root();
  std::vector<Polynomial> values;
  Exponents prefix(target->size(), 0);
  for (int k = 0; k < n; ++k) {
    Exponents ex = prefix;
    ex[2 * k] = 1;
    values.push_back(Polynomial::monomial(target, ring, ex));
    prefix[2 * k + 1] += w;
  }
  for (std::size_t q = 0; q < f.params()->size(); ++q)
    values.push_back(Polynomial::variable(target, ring, 2 * n + q));
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(substitute(c, values, target));
  Cochain fb(borel_coeffs, n, std::move(comps), f.params());

  CocycleCheck check = is_cocycle(fb);
  if (!check) throw VerificationFailed("Borel extension is not a cocycle", check.df.first_nonzero());
  Cochain back_f = restrict_to_root(fb, f.coefficients());
  if (back_f != f)
    throw VerificationFailed("Borel extension does not restrict to the original cochain",
                             (back_f - f).first_nonzero());
  return fb;
}

}  // namespace sl2coh
