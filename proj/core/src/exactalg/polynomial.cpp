#include "sl2coh/exactalg/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sl2coh/errors.hpp"

namespace sl2coh {

VarsPtr make_vars(VariableList vars) {
  for (std::size_t i = 0; i < vars.size(); ++i)
    for (std::size_t j = i + 1; j < vars.size(); ++j)
      if (vars[i].name == vars[j].name)
        throw InvalidArgument("duplicate variable name '" + vars[i].name + "'");
  return std::make_shared<const VariableList>(std::move(vars));
}

VarsPtr make_vars(std::initializer_list<Variable> vars) { return make_vars(VariableList(vars)); }

VarsPtr concat_vars(const VarsPtr& a, const VarsPtr& b) {
  if (b->empty()) return a;
  if (a->empty()) return b;
  VariableList all(*a);
  all.insert(all.end(), b->begin(), b->end());
  return make_vars(std::move(all));
}

bool same_vars(const VarsPtr& a, const VarsPtr& b) { return a == b || *a == *b; }

bool MonomialOrder::operator()(const Exponents& a, const Exponents& b) const {
  long da = std::accumulate(a.begin(), a.end(), 0L);
  long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(VarsPtr vars, Ring ring) : vars_(std::move(vars)), ring_(std::move(ring)) {
  if (!vars_) throw InvalidArgument("polynomial without variable list");
}

Polynomial Polynomial::constant(VarsPtr vars, Ring ring, const mpz_class& c) {
  Polynomial p(std::move(vars), std::move(ring));
  p.add_term(Exponents(p.num_vars(), 0), c);
  return p;
}

Polynomial Polynomial::variable(VarsPtr vars, Ring ring, std::size_t index) {
  Polynomial p(std::move(vars), std::move(ring));
  if (index >= p.num_vars()) throw InvalidArgument("variable index out of range");
  Exponents e(p.num_vars(), 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

Polynomial Polynomial::variable(VarsPtr vars, Ring ring, std::string_view name) {
  Polynomial p(vars, ring);
  auto idx = p.index_of(name);
  if (!idx) throw InvalidArgument("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), std::move(ring), *idx);
}

Polynomial Polynomial::monomial(VarsPtr vars, Ring ring, Exponents exps, const mpz_class& c) {
  Polynomial p(std::move(vars), std::move(ring));
  if (exps.size() != p.num_vars()) throw ShapeMismatch("exponent vector length mismatch");
  for (std::size_t i = 0; i < exps.size(); ++i)
    if (exps[i] < 0 && !(*p.vars_)[i].laurent)
      throw SubstitutionError("negative exponent on non-Laurent variable " + (*p.vars_)[i].name);
  p.add_term(exps, c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool Polynomial::is_unit_monomial() const {
  if (terms_.size() != 1) return false;
  const mpz_class& c = terms_.begin()->second;
  if (ring_.is_integers()) return c == 1 || c == -1;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), ring_.modulus().get_mpz_t());
  return g == 1;
}

mpz_class Polynomial::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class Polynomial::constant_term() const { return coefficient(Exponents(num_vars(), 0)); }

int Polynomial::total_degree() const {
  int best = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (first || d > best) best = d;
    first = false;
  }
  return best;
}

bool Polynomial::is_homogeneous(int degree) const {
  return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == degree;
  });
}

std::optional<std::size_t> Polynomial::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i)
    if ((*vars_)[i].name == name) return i;
  return std::nullopt;
}

void Polynomial::add_term(const Exponents& e, const mpz_class& c) {
  if (e.size() != num_vars()) throw ShapeMismatch("exponent vector length mismatch");
  mpz_class v = c;
  ring_.reduce(v);
  if (v == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, v);
  if (!inserted) {
    it->second += v;
    ring_.reduce(it->second);
    if (it->second == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other, const char* op) const {
  require_same_ring(ring_, other.ring_, op);
  if (!same_vars(vars_, other.vars_))
    throw ShapeMismatch(std::string(op) + ": polynomials over different variable lists");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other, "polynomial +");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other, "polynomial -");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b, "polynomial *");
  Polynomial out(a.vars_, a.ring_);
  if (a.is_zero() || b.is_zero()) return out;
  const std::size_t n = a.num_vars();
  Exponents e(n);
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    // shifting by a monomial preserves the order, so terms arrive sorted
    const auto& [em, cm] = *(a.terms_.size() == 1 ? a.terms_ : b.terms_).begin();
    const auto& other = a.terms_.size() == 1 ? b.terms_ : a.terms_;
    mpz_class v;
    for (const auto& [eo, co] : other) {
      v = cm * co;
      out.ring_.reduce(v);
      if (v == 0) continue;
      for (std::size_t i = 0; i < n; ++i) e[i] = em[i] + eo[i];
      out.terms_.emplace_hint(out.terms_.end(), e, v);
    }
    return out;
  }
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = out.terms_.try_emplace(e);
      mpz_addmul(it->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    }
  }
  for (auto it = out.terms_.begin(); it != out.terms_.end();) {
    out.ring_.reduce(it->second);
    if (it->second == 0)
      it = out.terms_.erase(it);
    else
      ++it;
  }
  return out;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::scaled(const mpz_class& c) const {
  Polynomial out(vars_, ring_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

Polynomial Polynomial::pow(unsigned long n) const {
  Polynomial result = constant(vars_, ring_, 1);
  Polynomial base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return a.ring_ == b.ring_ && same_vars(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

std::string Polynomial::monomial_string(const Exponents& e) const {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += (*vars_)[i].name;
    if (e[i] != 1) out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpz_class mag = abs(c);
    bool negative = c < 0;
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(e);
    if (mono == "1")
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << '*' << mono;
  }
  return os.str();
}

namespace {

void check_laurent(const Polynomial& p) {
  const auto& vars = *p.vars();
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] < 0 && !vars[i].laurent)
        throw SubstitutionError("negative exponent on non-Laurent variable " + vars[i].name);
}

Polynomial unit_monomial_inverse(const Polynomial& v, const std::string& for_var) {
  if (!v.is_unit_monomial())
    throw SubstitutionError("negative power of " + for_var + " needs an invertible monomial, got " +
                            v.to_string());
  const auto& [e, c] = *v.terms().begin();
  Exponents inv(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) inv[i] = -e[i];
  mpz_class ci;
  if (v.ring().is_integers())
    ci = c;
  else
    mpz_invert(ci.get_mpz_t(), c.get_mpz_t(), v.ring().modulus().get_mpz_t());
  Polynomial out(v.vars(), v.ring());
  out.add_term(inv, ci);
  return out;
}

}  // namespace

Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values,
                      const VarsPtr& target) {
  const std::size_t n = f.num_vars();
  if (values.size() != n)
    throw SubstitutionError("assignment has " + std::to_string(values.size()) + " values for " +
                            std::to_string(n) + " variables");
  for (const auto& v : values) {
    require_same_ring(f.ring(), v.ring(), "substitute");
    if (!same_vars(v.vars(), target))
      throw ShapeMismatch("substitute: value over a variable list other than the target");
  }

  // Cached powers per variable, positive and negative.
  std::vector<std::vector<Polynomial>> pos(n), neg(n);
  auto power = [&](std::size_t i, int k) -> const Polynomial& {
    auto& cache = k >= 0 ? pos[i] : neg[i];
    unsigned want = static_cast<unsigned>(k >= 0 ? k : -k);
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target, f.ring(), 1));
      if (k < 0) cache.push_back(unit_monomial_inverse(values[i], (*f.vars())[i].name));
      else cache.push_back(values[i]);
    }
    while (cache.size() <= want) cache.push_back(cache.back() * cache[1]);
    return cache[want];
  };

  // monomial values first keep the running product a single term as long as possible
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_partition(order.begin(), order.end(),
                        [&](std::size_t i) { return values[i].size() <= 1; });
  Polynomial out(target, f.ring());
  for (const auto& [e, c] : f.terms()) {
    Polynomial term = Polynomial::constant(target, f.ring(), c);
    for (std::size_t i : order)
      if (e[i] != 0 && !term.is_zero()) term = term * power(i, e[i]);
    out += term;
  }
  check_laurent(out);
  return out;
}

Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment) {
  std::vector<Polynomial> values;
  values.reserve(f.num_vars());
  for (const auto& var : *f.vars()) {
    auto it = assignment.find(var.name);
    if (it == assignment.end())
      throw SubstitutionError("assignment misses variable '" + var.name + "'");
    values.push_back(it->second);
  }
  if (values.empty()) {
    if (assignment.empty())
      throw SubstitutionError("cannot infer target variables from an empty assignment");
    const Polynomial& any = assignment.begin()->second;
    return Polynomial::constant(any.vars(), f.ring(), f.constant_term());
  }
  VarsPtr target = values.front().vars();
  return substitute(f, values, target);
}

Polynomial remap(const Polynomial& f, const VarsPtr& target, std::span<const int> mapping) {
  if (mapping.size() != f.num_vars()) throw ShapeMismatch("remap: mapping length mismatch");
  Polynomial out(target, f.ring());
  Exponents e(target->size());
  for (const auto& [src, c] : f.terms()) {
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (src[i] == 0) continue;
      if (mapping[i] < 0) throw ShapeMismatch("remap drops a variable that occurs");
      e[static_cast<std::size_t>(mapping[i])] += src[i];
    }
    out.add_term(e, c);
  }
  check_laurent(out);
  return out;
}

Polynomial exact_div_scalar(const Polynomial& f, const mpz_class& n) {
  if (!f.ring().is_integers())
    throw RingMismatch("exact_div_scalar requires ZZ coefficients, got " + f.ring().name());
  if (n == 0) throw DivisionByZero("exact_div_scalar by zero");
  Polynomial out(f.vars(), f.ring());
  mpz_class q;
  for (const auto& [e, c] : f.terms()) {
    if (!mpz_divisible_p(c.get_mpz_t(), n.get_mpz_t())) {
      std::string mono = f.monomial_string(e);
      throw NotDivisible("coefficient " + c.get_str() + " of " + mono + " is not divisible by " +
                             n.get_str(),
                         mono);
    }
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), n.get_mpz_t());
    out.add_term(e, q);
  }
  return out;
}

Polynomial reduce_mod(const Polynomial& f, const mpz_class& m) {
  if (!f.ring().is_integers())
    throw RingMismatch("reduce_mod requires ZZ coefficients, got " + f.ring().name());
  return change_ring(f, Ring::modulo(m));
}

Polynomial change_ring(const Polynomial& f, const Ring& target) {
  if (!f.ring().reduces_to(target))
    throw RingMismatch("no reduction map " + f.ring().name() + " -> " + target.name());
  Polynomial out(f.vars(), target);
  for (const auto& [e, c] : f.terms()) out.add_term(e, c);
  return out;
}

}  // namespace sl2coh
