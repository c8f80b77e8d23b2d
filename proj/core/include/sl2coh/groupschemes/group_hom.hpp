#pragma once

#include <string>
#include <vector>

#include "sl2coh/groupschemes/group_scheme.hpp"

namespace sl2coh {

/// A homomorphism G -> H, stored as the algebra map k[H] -> k[G] on generators.
class GroupHom {
 public:
  /// `pullback[t]` is the image of H's t-th generator, over G.copies(1). Verifies
  /// compatibility with comultiplication and counit.
  GroupHom(std::string name, GroupPtr source, GroupPtr target, std::vector<Polynomial> pullback);

  const std::string& name() const { return name_; }
  const GroupPtr& source() const { return source_; }
  const GroupPtr& target() const { return target_; }
  const std::vector<Polynomial>& pullback() const { return pullback_; }

  /// Pulls a function on H^n (over target.copies(n)) back to G^n.
  Polynomial pull(const Polynomial& f, int ncopies) const;

  GroupHom base_change(const Ring& ring) const;

  /// Composite source -> target -> next.target().
  GroupHom then(const GroupHom& next) const;

 private:
  void verify() const;

  std::string name_;
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Polynomial> pullback_;
};

/// x_alpha : Ga -> SL2, s |-> [[1,0],[s,1]] (alpha is the negative root).
GroupHom root_hom(const Ring& ring = Ring::integers());
/// T -> SL2, u |-> diag(u, 1/u).
GroupHom torus_hom(const Ring& ring = Ring::integers());
/// B -> SL2 for the (a, c) presentation.
GroupHom borel_hom(const Ring& ring = Ring::integers());
/// B[x,u] -> SL2, (x, u) |-> x_alpha(x) diag(u, 1/u).
GroupHom borel_xu_hom(const Ring& ring = Ring::integers());
/// Ga -> B[x,u], s |-> (s, 1).
GroupHom root_into_borel(const Ring& ring = Ring::integers());
/// T -> B[x,u], u |-> (0, u).
GroupHom torus_into_borel(const Ring& ring = Ring::integers());
/// Coordinate changes between the two Borel presentations.
GroupHom borel_xu_to_ac(const Ring& ring = Ring::integers());
GroupHom borel_ac_to_xu(const Ring& ring = Ring::integers());

}  // namespace sl2coh
