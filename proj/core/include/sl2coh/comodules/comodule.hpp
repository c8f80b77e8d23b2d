#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sl2coh/comodules/divided_powers.hpp"
#include "sl2coh/exactalg/lattice.hpp"
#include "sl2coh/groupschemes/group_hom.hpp"

namespace sl2coh {

/// Column j of a coaction matrix: the nonzero entries rho_ij, rows ascending, each a
/// normal-form polynomial over group.copies(1).
using CoactionColumn = std::vector<std::pair<std::size_t, Polynomial>>;

class Comodule;
using ComodulePtr = std::shared_ptr<const Comodule>;

/// Finite free comodule with coaction rho(e_j) = sum_i e_i (x) rho_ij.
///
/// Columns are computed on first use and cached, so large functor outputs (Gamma^m of a
/// rank-20 module has rank 1540) only pay for the columns a computation touches. The
/// descriptor records how the module was built; two modules with the same descriptor, group
/// and rank are the same comodule.
class Comodule {
 public:
  enum class Kind { Explicit, DividedPower, SymmetricPower, Dual, Restricted, BaseChanged, Twist,
                    Tensor, DirectSum, Sub };
  using ColumnFn = std::function<CoactionColumn(std::size_t)>;

  struct Info {
    Kind kind = Kind::Explicit;
    std::string descriptor;
    GroupPtr group;
    std::vector<std::string> labels;
    /// Weights of the diagonal torus of SL2 on the basis, when the basis is a weight basis.
    std::optional<std::vector<int>> weights;
    /// Underlying modules (Gamma/S/dual/... of what).
    std::vector<ComodulePtr> parents;
    /// Exponent of Gamma^m / S^m, or the twist s.
    int power = 0;
    /// Basis multisets for Gamma^m and S^m.
    std::vector<Exponents> multisets;
    /// Homomorphism for restricted modules.
    std::shared_ptr<const GroupHom> hom;
  };

  Comodule(Info info, ColumnFn columns);

  Kind kind() const { return info_.kind; }
  const std::string& descriptor() const { return info_.descriptor; }
  const GroupPtr& group() const { return info_.group; }
  const Ring& ring() const { return info_.group->ring(); }
  std::size_t rank() const { return info_.labels.size(); }
  const std::vector<std::string>& labels() const { return info_.labels; }
  const std::optional<std::vector<int>>& weights() const { return info_.weights; }
  const std::vector<ComodulePtr>& parents() const { return info_.parents; }
  int power() const { return info_.power; }
  const std::shared_ptr<const GroupHom>& hom() const { return info_.hom; }
  const std::vector<Exponents>& multisets() const { return info_.multisets; }
  std::optional<std::size_t> index_of_multiset(const Exponents& e) const;
  std::optional<std::size_t> index_of_label(const std::string& label) const;

  const CoactionColumn& column(std::size_t j) const;
  Polynomial entry(std::size_t i, std::size_t j) const;
  /// rho(v) = sum_i e_i (x) (sum_j rho_ij v_j) as the vector of coefficient polynomials.
  std::vector<Polynomial> coact(const std::vector<mpz_class>& v) const;

  std::string to_string() const;

 private:
  Info info_;
  ColumnFn compute_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<CoactionColumn>> cache_;
};

/// Same construction (pointer, or descriptor + group + rank).
bool same_comodule(const ComodulePtr& a, const ComodulePtr& b);
/// Entrywise comparison of all coaction columns.
bool structurally_equal(const Comodule& a, const Comodule& b);

ComodulePtr make_comodule(std::string descriptor, GroupPtr group, std::vector<std::string> labels,
                          std::vector<CoactionColumn> columns,
                          std::optional<std::vector<int>> weights = std::nullopt);
ComodulePtr trivial_comodule(const GroupPtr& group);

/// gl2 with the conjugation action of SL2, basis (e11, e21, e12, e22); e21 = e_alpha.
ComodulePtr gl2_conjugation(const Ring& ring = Ring::integers());
inline constexpr std::size_t kE11 = 0, kEAlpha = 1, kEMinusAlpha = 2, kE22 = 3;

/// Gamma^m M: basis e^[lambda] with <e^[lambda], x^lambda> = 1 against S^m(M^#).
ComodulePtr div_power(const ComodulePtr& m, int power);
ComodulePtr sym_power(const ComodulePtr& m, int power);
/// Hom(M, base ring) with rho^#(g) = rho(g^-1)^T.
ComodulePtr dual(const ComodulePtr& m);
ComodulePtr restrict(const ComodulePtr& m, const GroupHom& phi);
/// Coefficients pushed along ZZ -> ZZ/m (or ZZ/m -> ZZ/m'). Commutes with the functors.
ComodulePtr base_change(const ComodulePtr& m, const Ring& ring);
inline ComodulePtr mod_p(const ComodulePtr& m, const mpz_class& p) {
  return base_change(m, Ring::modulo(p));
}
/// s-th Frobenius twist over ZZ/p: every coaction exponent multiplied by p^s.
ComodulePtr frobenius_twist(const ComodulePtr& m, int s);
ComodulePtr tensor(const ComodulePtr& a, const ComodulePtr& b);
ComodulePtr direct_sum(const ComodulePtr& a, const ComodulePtr& b);

/// Comodule structure on a coaction-stable sublattice of M (over ZZ); throws
/// VerificationFailed if some rho(b) leaves the lattice.
ComodulePtr induced_subcomodule(const ComodulePtr& m, const IntegerLattice& sub);

struct GeneratedSubcomodule {
  IntegerLattice lattice;
  ComodulePtr module;
};
/// Saturated span of the coefficient vectors of rho(v), with its induced structure.
GeneratedSubcomodule generated_subcomodule(const ComodulePtr& m, const std::vector<mpz_class>& v);

/// (id (x) Delta) rho == (rho (x) id) rho; throws VerificationFailed with the first bad entry.
void check_coassociative(const Comodule& m);
/// eps(rho) == identity.
void check_counit(const Comodule& m);

}  // namespace sl2coh
