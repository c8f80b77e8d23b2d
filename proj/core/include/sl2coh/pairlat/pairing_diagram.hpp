#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "sl2coh/comodules/comodule_map.hpp"
#include "sl2coh/exactalg/lattice.hpp"
#include "sl2coh/hochschild/cup.hpp"

namespace sl2coh {

/// The lattices attached to a free comodule X over ZZ and a surjection pi: X mod p -> V.
///   K = {x : pi(x) = 0},  Y = {f in X^# : f(K) in pZZ}.
struct PairingLattices {
  mpz_class p;
  ComodulePtr x;
  ComoduleMap projection;
  IntegerLattice k;
  IntegerLattice y;
  /// Y with the structure induced from X^#, basis = rows of y.basis().
  ComodulePtr y_module;
  /// Y -> X^# over ZZ.
  ComoduleMap y_inclusion;
  /// Y mod p -> V^#, f -> (v -> f(lift of v)).
  ComoduleMap y_reduction;

  const ComodulePtr& v() const { return projection.target(); }
};

/// Works for any free X; checks that pi is onto and that K and Y are coaction-stable.
PairingLattices build_pairing_lattices(const ComodulePtr& x, const ComoduleMap& projection);

/// X_r = Gamma^{p^r}(gl2) over ZZ.
ComodulePtr lattice_X(const mpz_class& p, int r);
/// Gamma^{p^r}(gl2) mod p -> (gl2 mod p)^(r).
ComoduleMap build_X_map(const mpz_class& p, int r);
IntegerLattice build_K(const mpz_class& p, int r);
IntegerLattice build_Y(const mpz_class& p, int r);
PairingLattices pairing_lattices(const mpz_class& p, int r);

/// Gamma^m X (x) S^m Y -> ZZ, the evaluation pairing pulled back along S^m(Y -> X^#).
Pairing top_pairing(const PairingLattices& data, int m);
Pairing top_pairing(const mpz_class& p, int r, int m);
/// Gamma^m V (x) S^m(V^#) -> ZZ/p.
Pairing bottom_pairing(const PairingLattices& data, int m);

struct DiagramCheck {
  bool commutes = false;
  bool left_surjective = false;
  /// |Gamma^m X| * |S^m Y|; every pair is covered, zero pairs implicitly.
  std::size_t pairs = 0;
  std::string base;
  std::optional<std::string> witness;
  explicit operator bool() const { return commutes && left_surjective; }
};

/// Compares top (base-changed to `base`, then reduced mod p) with bottom . (verticals) on all
/// pairs of basis vectors. `base` is ZZ or ZZ/p^e.
DiagramCheck check_diagram(const PairingLattices& data, int m, const Ring& base = Ring::integers());
DiagramCheck diagram_commutes(const mpz_class& p, int r, int m, const Ring& base = Ring::integers());

/// X = gl2 + gl2 with (v, w) -> v + w onto gl2 mod p.
PairingLattices doubled_gl2_lattices(const mpz_class& p);

}  // namespace sl2coh
