#include "sl2coh/groupschemes/group_scheme.hpp"

#include <algorithm>

#include "sl2coh/errors.hpp"

namespace sl2coh {

namespace {

Polynomial var(const VarsPtr& vars, const Ring& ring, const std::string& name) {
  return Polynomial::variable(vars, ring, name);
}

Polynomial constant(const VarsPtr& vars, const Ring& ring, long c) {
  return Polynomial::constant(vars, ring, c);
}

Polynomial power(const VarsPtr& vars, const Ring& ring, const std::string& name, int k) {
  Exponents e(vars->size(), 0);
  for (std::size_t i = 0; i < vars->size(); ++i)
    if ((*vars)[i].name == name) e[i] = k;
  return Polynomial::monomial(vars, ring, e);
}

}  // namespace

std::string group_kind_name(GroupKind kind) {
  switch (kind) {
    case GroupKind::Ga: return "Ga";
    case GroupKind::T: return "T";
    case GroupKind::B: return "B";
    case GroupKind::SL2: return "SL2";
    case GroupKind::BorelXU: return "B[x,u]";
  }
  return "?";
}

GroupScheme::GroupScheme(GroupKind kind, Ring ring)
    : kind_(kind), ring_(std::move(ring)), name_(group_kind_name(kind)) {
  switch (kind) {
    case GroupKind::Ga: generators_ = {{"X", false}}; break;
    case GroupKind::T: generators_ = {{"u", true}}; break;
    case GroupKind::B: generators_ = {{"a", true}, {"c", false}}; break;
    case GroupKind::SL2: generators_ = {{"a", false}, {"b", false}, {"c", false}, {"d", false}}; break;
    case GroupKind::BorelXU: generators_ = {{"x", false}, {"u", true}}; break;
  }
  const VarsPtr one = copies(1);
  const VarsPtr two = copies(2);
  const Ring& R = ring_;
  auto v1 = [&](const char* n) { return var(one, R, n); };
  auto v2 = [&](const std::string& n) { return var(two, R, n); };
  switch (kind) {
    case GroupKind::Ga:
      comul_ = {v2("X1") + v2("X2")};
      counit_ = {0};
      antipode_ = {-v1("X")};
      break;
    case GroupKind::T:
      comul_ = {v2("u1") * v2("u2")};
      counit_ = {1};
      antipode_ = {power(one, R, "u", -1)};
      break;
    case GroupKind::B:
      // [[a,0],[c,1/a]] * [[a',0],[c',1/a']]
      comul_ = {v2("a1") * v2("a2"), v2("c1") * v2("a2") + power(two, R, "a1", -1) * v2("c2")};
      counit_ = {1, 0};
      antipode_ = {power(one, R, "a", -1), -v1("c")};
      break;
    case GroupKind::SL2:
      comul_ = {v2("a1") * v2("a2") + v2("b1") * v2("c2"), v2("a1") * v2("b2") + v2("b1") * v2("d2"),
                v2("c1") * v2("a2") + v2("d1") * v2("c2"), v2("c1") * v2("b2") + v2("d1") * v2("d2")};
      counit_ = {1, 0, 0, 1};
      antipode_ = {v1("d"), -v1("b"), -v1("c"), v1("a")};
      break;
    case GroupKind::BorelXU:
      // x_alpha(x1) t1 x_alpha(x2) t2 = x_alpha(x1 + u1^-2 x2) t1 t2
      comul_ = {v2("x1") + power(two, R, "u1", -2) * v2("x2"), v2("u1") * v2("u2")};
      counit_ = {0, 1};
      antipode_ = {-(power(one, R, "u", 2) * v1("x")), power(one, R, "u", -1)};
      break;
  }
}

VarsPtr GroupScheme::copies(int n) const {
  std::lock_guard lock(cache_mutex_);
  auto it = copies_cache_.find(n);
  if (it != copies_cache_.end()) return it->second;
  VariableList vars;
  for (int k = 1; k <= n; ++k)
    for (const auto& g : generators_)
      vars.push_back({n == 1 ? g.name : g.name + std::to_string(k), g.laurent});
  VarsPtr ptr = make_vars(std::move(vars));
  copies_cache_.emplace(n, ptr);
  return ptr;
}

Polynomial GroupScheme::normal_form(const Polynomial& f, int ncopies) const {
  const std::size_t ng = generator_count();
  if (f.num_vars() < ng * static_cast<std::size_t>(ncopies))
    throw ShapeMismatch("normal_form: polynomial has fewer variables than " +
                        std::to_string(ncopies) + " copies of " + name_);
  if (kind_ != GroupKind::SL2) return f;
  bool needs = false;
  for (const auto& [e, c] : f.terms()) {
    for (int k = 0; k < ncopies && !needs; ++k)
      if (e[k * ng] > 0 && e[k * ng + 3] > 0) needs = true;
    if (needs) break;
  }
  if (!needs) return f;

  Polynomial out(f.vars(), f.ring());
  std::vector<std::pair<Exponents, mpz_class>> expansion, next;
  for (const auto& [e, c] : f.terms()) {
    expansion.assign(1, {e, c});
    for (int k = 0; k < ncopies; ++k) {
      const std::size_t ia = k * ng, ib = ia + 1, ic = ia + 2, id = ia + 3;
      const int t = std::min(e[ia], e[id]);
      if (t <= 0) continue;
      // (ad)^t = (1 + bc)^t
      next.clear();
      for (auto& [ex, cx] : expansion) {
        Exponents base = ex;
        base[ia] -= t;
        base[id] -= t;
        for (int s = 0; s <= t; ++s) {
          Exponents ey = base;
          ey[ib] += s;
          ey[ic] += s;
          next.emplace_back(std::move(ey), cx * binomial(t, s));
        }
      }
      expansion.swap(next);
    }
    for (const auto& [ex, cx] : expansion) out.add_term(ex, cx);
  }
  return out;
}

Polynomial place_copies(const GroupScheme& g, const Polynomial& f, int k,
                        const std::vector<int>& copy_map, const VarsPtr& target, int n) {
  const int ng = static_cast<int>(g.generator_count());
  const int nvars = static_cast<int>(f.num_vars());
  const int nparams = nvars - k * ng;
  if (nparams < 0 || static_cast<int>(copy_map.size()) != k)
    throw ShapeMismatch("place_copies: shape mismatch");
  const int target_params = static_cast<int>(target->size()) - n * ng;
  if (target_params < 0 || (nparams != 0 && target_params != nparams))
    throw ShapeMismatch("place_copies: target has wrong number of parameters");
  std::vector<int> mapping(nvars);
  for (int c = 0; c < k; ++c)
    for (int t = 0; t < ng; ++t) mapping[c * ng + t] = (copy_map[c] - 1) * ng + t;
  for (int q = 0; q < nparams; ++q) mapping[k * ng + q] = n * ng + q;
  return remap(f, target, mapping);
}

std::vector<Polynomial> GroupScheme::group_law(int n) const {
  if (n < 1) throw InvalidArgument("group_law needs at least one factor");
  const std::size_t ng = generator_count();
  const VarsPtr one = copies(1);
  std::vector<Polynomial> law;
  for (std::size_t t = 0; t < ng; ++t) law.push_back(Polynomial::variable(one, ring_, t));
  for (int k = 2; k <= n; ++k) {
    const VarsPtr target = copies(k);
    std::vector<int> prefix(k - 1);
    for (int c = 0; c < k - 1; ++c) prefix[c] = c + 1;
    std::vector<Polynomial> values;
    for (std::size_t t = 0; t < ng; ++t) values.push_back(place_copies(*this, law[t], k - 1, prefix, target, k));
    for (std::size_t t = 0; t < ng; ++t)
      values.push_back(Polynomial::variable(target, ring_, (k - 1) * ng + t));
    std::vector<Polynomial> next;
    for (std::size_t t = 0; t < ng; ++t)
      next.push_back(normal_form(substitute(comul_[t], values, target), k));
    law = std::move(next);
  }
  return law;
}

Polynomial GroupScheme::comultiply(const Polynomial& f) const {
  return normal_form(substitute(f, comul_, copies(2)), 2);
}

Polynomial GroupScheme::apply_counit(const Polynomial& f) const {
  VarsPtr none = copies(0);
  std::vector<Polynomial> values;
  for (const auto& c : counit_) values.push_back(Polynomial::constant(none, ring_, c));
  return substitute(f, values, none);
}

Polynomial GroupScheme::apply_antipode(const Polynomial& f) const {
  return normal_form(substitute(f, antipode_, copies(1)), 1);
}

GroupPtr GroupScheme::base_change(const Ring& ring) const {
  if (!ring_.reduces_to(ring))
    throw RingMismatch("cannot base change " + name_ + " from " + ring_.name() + " to " + ring.name());
  return make_group(kind_, ring);
}

void GroupScheme::verify_hopf_axioms() const {
  const std::size_t ng = generator_count();
  const VarsPtr one = copies(1), two = copies(2), three = copies(3);
  std::vector<Polynomial> comul_12, comul_23, gens_1, gens_2, gens_3, eps1;
  for (std::size_t t = 0; t < ng; ++t) {
    comul_12.push_back(place_copies(*this, comul_[t], 2, {1, 2}, three, 3));
    comul_23.push_back(place_copies(*this, comul_[t], 2, {2, 3}, three, 3));
    gens_1.push_back(Polynomial::variable(three, ring_, t));
    gens_3.push_back(Polynomial::variable(three, ring_, 2 * ng + t));
    gens_2.push_back(Polynomial::variable(one, ring_, t));
    eps1.push_back(Polynomial::constant(one, ring_, counit_[t]));
  }
  for (std::size_t t = 0; t < ng; ++t) {
    const std::string gen = generators_[t].name;
    std::vector<Polynomial> lhs_vals = comul_12, rhs_vals = gens_1;
    lhs_vals.insert(lhs_vals.end(), gens_3.begin(), gens_3.end());
    rhs_vals.insert(rhs_vals.end(), comul_23.begin(), comul_23.end());
    Polynomial lhs = normal_form(substitute(comul_[t], lhs_vals, three), 3);
    Polynomial rhs = normal_form(substitute(comul_[t], rhs_vals, three), 3);
    if (lhs != rhs)
      throw VerificationFailed(name_ + ": coassociativity fails on " + gen, (lhs - rhs).to_string());

    const Polynomial x = Polynomial::variable(one, ring_, t);
    std::vector<Polynomial> left_counit = eps1, right_counit = gens_2;
    left_counit.insert(left_counit.end(), gens_2.begin(), gens_2.end());
    right_counit.insert(right_counit.end(), eps1.begin(), eps1.end());
    Polynomial l = normal_form(substitute(comul_[t], left_counit, one), 1);
    Polynomial r = normal_form(substitute(comul_[t], right_counit, one), 1);
    if (l != x || r != x)
      throw VerificationFailed(name_ + ": counit law fails on " + gen, (l - x).to_string());

    std::vector<Polynomial> s_left = antipode_, s_right = gens_2;
    s_left.insert(s_left.end(), gens_2.begin(), gens_2.end());
    s_right.insert(s_right.end(), antipode_.begin(), antipode_.end());
    const Polynomial eps = Polynomial::constant(one, ring_, counit_[t]);
    Polynomial sl = normal_form(substitute(comul_[t], s_left, one), 1);
    Polynomial sr = normal_form(substitute(comul_[t], s_right, one), 1);
    if (sl != eps || sr != eps)
      throw VerificationFailed(name_ + ": antipode law fails on " + gen, (sl - eps).to_string());
  }
}

GroupPtr make_group(GroupKind kind, const Ring& ring) {
  GroupPtr g(new GroupScheme(kind, ring));
  g->verify_hopf_axioms();
  return g;
}

bool same_group(const GroupPtr& a, const GroupPtr& b) { return a == b || *a == *b; }

Matrix2 Matrix2::operator*(const Matrix2& o) const {
  Matrix2 r{entries};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j);
  return r;
}

Matrix2 matrix_point(const GroupScheme& g) {
  const VarsPtr one = g.copies(1);
  const Ring& R = g.ring();
  auto v = [&](const char* n) { return var(one, R, n); };
  auto k = [&](long c) { return constant(one, R, c); };
  switch (g.kind()) {
    case GroupKind::SL2: return Matrix2{{v("a"), v("b"), v("c"), v("d")}};
    case GroupKind::B: return Matrix2{{v("a"), k(0), v("c"), power(one, R, "a", -1)}};
    case GroupKind::T: return Matrix2{{v("u"), k(0), k(0), power(one, R, "u", -1)}};
    case GroupKind::BorelXU:
      return Matrix2{{v("u"), k(0), v("x") * v("u"), power(one, R, "u", -1)}};
    case GroupKind::Ga: return Matrix2{{k(1), k(0), v("X"), k(1)}};
  }
  throw InvalidArgument("matrix_point: unknown group");
}

Matrix2 matrix_point_inverse(const GroupScheme& g) {
  Matrix2 m = matrix_point(g);
  for (auto& e : m.entries) e = g.apply_antipode(e);
  return m;
}

int torus_weight_of_matrix_unit(int i, int j) {
  GroupPtr t = make_group(GroupKind::T);
  const VarsPtr one = t->copies(1);
  Matrix2 unit{{constant(one, t->ring(), 0), constant(one, t->ring(), 0),
                constant(one, t->ring(), 0), constant(one, t->ring(), 0)}};
  unit(i, j) = constant(one, t->ring(), 1);
  Matrix2 conj = matrix_point(*t) * unit * matrix_point_inverse(*t);
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s)
      if ((r != i || s != j) && !conj(r, s).is_zero())
        throw VerificationFailed("matrix unit is not a torus weight vector", conj(r, s).to_string());
  const Polynomial& entry = conj(i, j);
  if (entry.size() != 1 || entry.terms().begin()->second != 1)
    throw VerificationFailed("torus does not act on E_ij by a character", entry.to_string());
  return entry.terms().begin()->first[0];
}

int torus_weight_of_root() { return torus_weight_of_matrix_unit(1, 0); }

}  // namespace sl2coh
