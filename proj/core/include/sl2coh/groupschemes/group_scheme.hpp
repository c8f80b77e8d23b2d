#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "sl2coh/exactalg/polynomial.hpp"

namespace sl2coh {

/// Which group scheme a presentation describes. `BorelXU` is the Borel subgroup in the
/// coordinates b = x_alpha(x) * diag(u, 1/u); `B` uses the matrix entries (a, c).
enum class GroupKind { Ga, T, B, SL2, BorelXU };

class GroupScheme;
using GroupPtr = std::shared_ptr<const GroupScheme>;

/// Hopf-algebra presentation of an affine group scheme over ZZ or ZZ/m.
///
/// Polynomials on G^n live over `copies(n)`: the generator list repeated n times. A single
/// copy uses the bare generator names (a, b, c, d); n >= 2 copies append the copy index
/// (a1, b1, ..., d2). Coordinate rings are normalised by `normal_form`.
class GroupScheme {
 public:
  GroupKind kind() const { return kind_; }
  const Ring& ring() const { return ring_; }
  const std::string& name() const { return name_; }
  const VariableList& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }

  VarsPtr copies(int n) const;

  /// Comultiplication of each generator, over copies(2).
  const std::vector<Polynomial>& comultiplication() const { return comul_; }
  const std::vector<mpz_class>& counit() const { return counit_; }
  /// Antipode of each generator, over copies(1).
  const std::vector<Polynomial>& antipode() const { return antipode_; }

  /// Canonical representative of `f`, whose variables start with copies(ncopies) (any trailing
  /// variables are treated as constants). For SL2 every monomial containing a_k and d_k is
  /// rewritten with a_k d_k -> 1 + b_k c_k.
  Polynomial normal_form(const Polynomial& f, int ncopies) const;

  /// Coordinates of the product g_1 ... g_n of n generic points, over copies(n).
  std::vector<Polynomial> group_law(int n) const;

  /// (Delta (x) id) applied to f over copies(1): the value f(g1 g2) over copies(2).
  Polynomial comultiply(const Polynomial& f) const;
  Polynomial apply_counit(const Polynomial& f) const;
  Polynomial apply_antipode(const Polynomial& f) const;

  /// Same presentation with coefficients reduced to `ring`.
  GroupPtr base_change(const Ring& ring) const;

  /// Throws VerificationFailed unless coassociativity, the counit law and the antipode law
  /// hold on every generator.
  void verify_hopf_axioms() const;

  friend bool operator==(const GroupScheme& a, const GroupScheme& b) {
    return a.kind_ == b.kind_ && a.ring_ == b.ring_;
  }

 private:
  friend GroupPtr make_group(GroupKind, const Ring&);
  GroupScheme(GroupKind kind, Ring ring);

  GroupKind kind_;
  Ring ring_;
  std::string name_;
  VariableList generators_;
  std::vector<Polynomial> comul_;
  std::vector<mpz_class> counit_;
  std::vector<Polynomial> antipode_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, VarsPtr> copies_cache_;
};

/// Builds a presentation and verifies its Hopf axioms.
GroupPtr make_group(GroupKind kind, const Ring& ring = Ring::integers());

bool same_group(const GroupPtr& a, const GroupPtr& b);
std::string group_kind_name(GroupKind kind);

/// Places a polynomial over copies(k) ++ params into copies(n) ++ params, sending copy i to
/// copy `copy_map[i]` (1-based). Parameters keep their position; a polynomial without
/// parameters may be placed into a target that has some.
Polynomial place_copies(const GroupScheme& g, const Polynomial& f, int k,
                        const std::vector<int>& copy_map, const VarsPtr& target, int n);

/// 2x2 matrix of polynomials, used for symbolic conjugation.
struct Matrix2 {
  std::vector<Polynomial> entries;  // row-major, size 4

  const Polynomial& operator()(int i, int j) const { return entries[2 * i + j]; }
  Polynomial& operator()(int i, int j) { return entries[2 * i + j]; }
  Matrix2 operator*(const Matrix2& o) const;
};

/// The point of SL2 given by a generic element of `g` (SL2, B, T, BorelXU or Ga via the root
/// homomorphism), with entries over copies(1).
Matrix2 matrix_point(const GroupScheme& g);
/// Its inverse, via the antipode.
Matrix2 matrix_point_inverse(const GroupScheme& g);

/// Exponent k with diag(u, 1/u) * E_ij * diag(u, 1/u)^-1 == u^k E_ij, computed symbolically.
int torus_weight_of_matrix_unit(int i, int j);
/// The root alpha (the negative root, E_21) as a character of T: returns -2.
int torus_weight_of_root();

}  // namespace sl2coh
