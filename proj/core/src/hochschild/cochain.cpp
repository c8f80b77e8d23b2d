#include "sl2coh/hochschild/cochain.hpp"

#include <numeric>
#include <sstream>

#include "sl2coh/errors.hpp"

namespace sl2coh {

namespace {

const VarsPtr& no_params() {
  static const VarsPtr empty = make_vars(VariableList{});
  return empty;
}

std::vector<int> consecutive(int first, int count) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

}  // namespace

VarsPtr cochain_vars(const GroupScheme& g, int n, const VarsPtr& params) {
  if (!params || params->empty()) return g.copies(n);
  return concat_vars(g.copies(n), params);
}

Cochain::Cochain(ComodulePtr coeffs, int degree, std::vector<Polynomial> components, VarsPtr params)
    : coeffs_(std::move(coeffs)),
      degree_(degree),
      params_(params ? std::move(params) : no_params()),
      vars_(cochain_vars(*coeffs_->group(), degree_, params_)),
      components_(std::move(components)) {
  if (degree_ < 0) throw InvalidArgument("negative cochain degree");
  if (components_.size() != coeffs_->rank())
    throw ShapeMismatch("cochain needs one component per coefficient basis vector");
  for (auto& c : components_) {
    if (!same_vars(c.vars(), vars_))
      throw ShapeMismatch("cochain component lives over the wrong variables");
    if (c.ring() != ring()) throw RingMismatch("cochain component over " + c.ring().name());
    c = group()->normal_form(c, degree_);
  }
}

Cochain Cochain::zero(ComodulePtr coeffs, int degree, VarsPtr params) {
  if (!params) params = no_params();
  VarsPtr vars = cochain_vars(*coeffs->group(), degree, params);
  std::vector<Polynomial> comps(coeffs->rank(), Polynomial(vars, coeffs->ring()));
  return Cochain(std::move(coeffs), degree, std::move(comps), std::move(params));
}

Cochain Cochain::vector(ComodulePtr coeffs, const std::vector<mpz_class>& v, VarsPtr params) {
  if (v.size() != coeffs->rank()) throw ShapeMismatch("vector length differs from the rank");
  if (!params) params = no_params();
  VarsPtr vars = cochain_vars(*coeffs->group(), 0, params);
  std::vector<Polynomial> comps;
  for (const auto& x : v) comps.push_back(Polynomial::constant(vars, coeffs->ring(), x));
  return Cochain(std::move(coeffs), 0, std::move(comps), std::move(params));
}

Cochain Cochain::single(ComodulePtr coeffs, int degree, std::size_t index, const Polynomial& f) {
  Cochain c = zero(coeffs, degree);
  if (index >= coeffs->rank()) throw ShapeMismatch("basis index out of range");
  std::vector<Polynomial> comps = c.components_;
  comps[index] = f;
  return Cochain(std::move(coeffs), degree, std::move(comps));
}

bool Cochain::is_zero() const {
  for (const auto& c : components_)
    if (!c.is_zero()) return false;
  return true;
}

void Cochain::check_compatible(const Cochain& o) const {
  if (!same_comodule(coeffs_, o.coeffs_) || degree_ != o.degree_ || !same_vars(params_, o.params_))
    throw ShapeMismatch("cochains of different shape");
}

Cochain& Cochain::operator+=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += o.components_[i];
  return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= o.components_[i];
  return *this;
}

Cochain Cochain::operator-() const { return scaled(-1); }

Cochain Cochain::scaled(const mpz_class& c) const {
  Cochain out = *this;
  for (auto& comp : out.components_) comp = comp.scaled(c);
  return out;
}

bool operator==(const Cochain& a, const Cochain& b) {
  if (!same_comodule(a.coeffs_, b.coeffs_) || a.degree_ != b.degree_ || !same_vars(a.params_, b.params_))
    return false;
  return a.components_ == b.components_;
}

std::string Cochain::to_string() const {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (components_[i].is_zero()) continue;
    if (any) os << '\n';
    os << coeffs_->labels()[i] << ": " << components_[i].to_string();
    any = true;
  }
  return any ? os.str() : "0";
}

std::string Cochain::first_nonzero() const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (!components_[i].is_zero()) return coeffs_->labels()[i] + ": " + components_[i].to_string();
  return "";
}

Cochain differential(const Cochain& f) {
  const GroupScheme& g = *f.group();
  const int n = f.degree();
  const std::size_t ng = g.generator_count();
  const std::size_t np = f.params()->size();
  const VarsPtr target = cochain_vars(g, n + 1, f.params());
  const Comodule& m = *f.coefficients();
  std::vector<Polynomial> out(m.rank(), Polynomial(target, f.ring()));

  // g1 . f(g2, ..., g_{n+1})
  const std::vector<int> shifted = consecutive(2, n);
  for (std::size_t j = 0; j < m.rank(); ++j) {
    if (f.component(j).is_zero()) continue;
    Polynomial fj = place_copies(g, f.component(j), n, shifted, target, n + 1);
    for (const auto& [i, rho] : m.column(j)) out[i] += place_copies(g, rho, 1, {1}, target, n + 1) * fj;
  }

  // (-1)^i f(g1, ..., g_i g_{i+1}, ..., g_{n+1})
  for (int i = 1; i <= n; ++i) {
    std::vector<Polynomial> values;
    for (int k = 1; k <= n; ++k)
      for (std::size_t t = 0; t < ng; ++t) {
        if (k < i)
          values.push_back(Polynomial::variable(target, f.ring(), (k - 1) * ng + t));
        else if (k == i)
          values.push_back(place_copies(g, g.comultiplication()[t], 2, {i, i + 1}, target, n + 1));
        else
          values.push_back(Polynomial::variable(target, f.ring(), k * ng + t));
      }
    for (std::size_t q = 0; q < np; ++q)
      values.push_back(Polynomial::variable(target, f.ring(), (n + 1) * ng + q));
    const mpz_class sign = (i % 2 == 0) ? 1 : -1;
    for (std::size_t j = 0; j < m.rank(); ++j)
      if (!f.component(j).is_zero()) out[j] += substitute(f.component(j), values, target).scaled(sign);
  }

  // (-1)^{n+1} f(g1, ..., g_n)
  const std::vector<int> prefix = consecutive(1, n);
  const mpz_class last = ((n + 1) % 2 == 0) ? 1 : -1;
  for (std::size_t j = 0; j < m.rank(); ++j)
    if (!f.component(j).is_zero())
      out[j] += place_copies(g, f.component(j), n, prefix, target, n + 1).scaled(last);

  return Cochain(f.coefficients(), n + 1, std::move(out), f.params());
}

CocycleCheck is_cocycle(const Cochain& f) {
  Cochain df = differential(f);
  const bool zero = df.is_zero();
  return {zero, std::move(df)};
}

Cochain change_ring(const Cochain& f, const Ring& ring) {
  ComodulePtr coeffs = base_change(f.coefficients(), ring);
  VarsPtr vars = cochain_vars(*coeffs->group(), f.degree(), f.params());
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) {
    Polynomial r = change_ring(c, ring);
    std::vector<int> ident(c.num_vars());
    std::iota(ident.begin(), ident.end(), 0);
    comps.push_back(remap(r, vars, ident));
  }
  return Cochain(coeffs, f.degree(), std::move(comps), f.params());
}

Cochain apply_coefficient_map(const Cochain& f, const ComoduleMap& phi) {
  if (!same_comodule(phi.source(), f.coefficients()))
    throw ShapeMismatch("coefficient map from " + phi.source()->descriptor() + " applied to a cochain in " +
                        f.coefficients()->descriptor());
  return Cochain(phi.target(), f.degree(), phi.apply(f.components()), f.params());
}

Cochain with_params(const Cochain& f, const VarsPtr& params) {
  const auto& old = *f.params();
  if (params->size() < old.size() || !std::equal(old.begin(), old.end(), params->begin()))
    throw ShapeMismatch("with_params: existing parameters must be a prefix");
  VarsPtr target = cochain_vars(*f.group(), f.degree(), params);
  std::vector<int> ident(f.vars()->size());
  std::iota(ident.begin(), ident.end(), 0);
  std::vector<Polynomial> comps;
  for (const auto& c : f.components()) comps.push_back(remap(c, target, ident));
  return Cochain(f.coefficients(), f.degree(), std::move(comps), params);
}

}  // namespace sl2coh
