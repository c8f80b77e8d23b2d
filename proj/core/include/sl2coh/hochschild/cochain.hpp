#pragma once

#include <string>
#include <vector>

#include "sl2coh/comodules/comodule.hpp"
#include "sl2coh/comodules/comodule_map.hpp"

namespace sl2coh {

/// Variables of a degree-n cochain: n copies of the group's generators followed by `params`.
VarsPtr cochain_vars(const GroupScheme& g, int n, const VarsPtr& params);

/// Hochschild n-cochain f: G^n -> M, one normal-form polynomial per basis vector of M.
///
/// Trailing parameter variables (for instance a generic torus point) are carried along
/// untouched by every operation.
class Cochain {
 public:
  Cochain(ComodulePtr coeffs, int degree, std::vector<Polynomial> components,
          VarsPtr params = nullptr);
  static Cochain zero(ComodulePtr coeffs, int degree, VarsPtr params = nullptr);
  /// Degree-0 cochain: a vector of M.
  static Cochain vector(ComodulePtr coeffs, const std::vector<mpz_class>& v, VarsPtr params = nullptr);
  /// f (x) e_index.
  static Cochain single(ComodulePtr coeffs, int degree, std::size_t index, const Polynomial& f);

  const GroupPtr& group() const { return coeffs_->group(); }
  const Ring& ring() const { return coeffs_->ring(); }
  const ComodulePtr& coefficients() const { return coeffs_; }
  int degree() const { return degree_; }
  const VarsPtr& params() const { return params_; }
  const VarsPtr& vars() const { return vars_; }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& component(std::size_t i) const { return components_.at(i); }
  bool is_zero() const;

  Cochain& operator+=(const Cochain& o);
  Cochain& operator-=(const Cochain& o);
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  Cochain operator-() const;
  Cochain scaled(const mpz_class& c) const;
  friend bool operator==(const Cochain& a, const Cochain& b);
  friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

  /// Nonzero components as "label: polynomial" lines; "0" for the zero cochain.
  std::string to_string() const;
  /// First nonzero component, rendered; empty when zero.
  std::string first_nonzero() const;

 private:
  void check_compatible(const Cochain& o) const;

  ComodulePtr coeffs_;
  int degree_;
  VarsPtr params_;
  VarsPtr vars_;
  std::vector<Polynomial> components_;
};

/// (df)(g1..g_{n+1}) = g1 f(g2..) + sum_i (-1)^i f(.., g_i g_{i+1}, ..) + (-1)^{n+1} f(g1..g_n).
Cochain differential(const Cochain& f);

struct CocycleCheck {
  bool cocycle;
  /// The expanded differential (zero when `cocycle`).
  Cochain df;
  explicit operator bool() const { return cocycle; }
};
CocycleCheck is_cocycle(const Cochain& f);

/// Coefficientwise reduction along ZZ -> ZZ/m; coefficients base-changed accordingly.
Cochain change_ring(const Cochain& f, const Ring& ring);
Cochain apply_coefficient_map(const Cochain& f, const ComoduleMap& phi);
/// Adds trailing parameters (existing ones must be a prefix of `params`).
Cochain with_params(const Cochain& f, const VarsPtr& params);

}  // namespace sl2coh
