#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sl2coh/exactalg/scalar.hpp"

namespace sl2coh {

/// A named indeterminate. Laurent variables may carry negative exponents.
struct Variable {
  std::string name;
  bool laurent = false;

  friend bool operator==(const Variable&, const Variable&) = default;
};

using VariableList = std::vector<Variable>;
using VarsPtr = std::shared_ptr<const VariableList>;

VarsPtr make_vars(VariableList vars);
VarsPtr make_vars(std::initializer_list<Variable> vars);
VarsPtr concat_vars(const VarsPtr& a, const VarsPtr& b);
/// Pointer equality, falling back to elementwise comparison.
bool same_vars(const VarsPtr& a, const VarsPtr& b);

using Exponents = std::vector<int>;

/// Graded-lex, largest first: higher total degree wins, ties broken lexicographically
/// with the first variable most significant.
struct MonomialOrder {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate Laurent polynomial over ZZ or ZZ/m.
///
/// Terms are kept in graded-lex order without zero coefficients; over ZZ/m every stored
/// coefficient lies in [0, m). Binary operations require identical variable lists and rings.
class Polynomial {
 public:
  using Terms = std::map<Exponents, mpz_class, MonomialOrder>;

  Polynomial(VarsPtr vars, Ring ring);

  static Polynomial constant(VarsPtr vars, Ring ring, const mpz_class& c);
  static Polynomial variable(VarsPtr vars, Ring ring, std::size_t index);
  static Polynomial variable(VarsPtr vars, Ring ring, std::string_view name);
  static Polynomial monomial(VarsPtr vars, Ring ring, Exponents exps, const mpz_class& c = 1);

  const VarsPtr& vars() const { return vars_; }
  const Ring& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  std::size_t num_vars() const { return vars_->size(); }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Single term whose coefficient is a unit of the base ring.
  bool is_unit_monomial() const;

  mpz_class coefficient(const Exponents& e) const;
  mpz_class constant_term() const;
  /// Largest total degree among the terms; 0 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous(int degree) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Accumulates c * x^e, pruning a resulting zero.
  void add_term(const Exponents& e, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const mpz_class& c) const;
  Polynomial pow(unsigned long n) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Canonical rendering, e.g. "2*X^3*Y + 3*X^2*Y^2 + 2*X*Y^3".
  std::string to_string() const;
  std::string monomial_string(const Exponents& e) const;

 private:
  void check_compatible(const Polynomial& other, const char* op) const;

  VarsPtr vars_;
  Ring ring_;
  Terms terms_;
};

/// Simultaneous substitution: variable i of `f` is replaced by `values[i]`, every value
/// living over `target`. Negative powers require a unit-monomial value; a negative exponent
/// on a non-Laurent target variable is an error.
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> values,
                      const VarsPtr& target);
/// Name-keyed variant; every variable of `f` must be assigned.
Polynomial substitute(const Polynomial& f, const std::map<std::string, Polynomial>& assignment);

/// Monomial renaming: variable i of `f` becomes variable `mapping[i]` of `target`
/// (-1 drops a variable, which must then have exponent zero everywhere).
Polynomial remap(const Polynomial& f, const VarsPtr& target, std::span<const int> mapping);

/// f / n over ZZ; every coefficient must be divisible by n.
Polynomial exact_div_scalar(const Polynomial& f, const mpz_class& n);
/// Reduction ZZ[...] -> (ZZ/m)[...].
Polynomial reduce_mod(const Polynomial& f, const mpz_class& m);
/// Coefficientwise reduction along a ring map ZZ -> ZZ/m or ZZ/m -> ZZ/m'.
Polynomial change_ring(const Polynomial& f, const Ring& target);

}  // namespace sl2coh
