#pragma once

#include <tuple>
#include <vector>

#include "sl2coh/comodules/comodule_map.hpp"
#include "sl2coh/hochschild/cochain.hpp"

namespace sl2coh {

/// Bilinear map phi: U (x) V -> Z given by phi(u_a (x) v_b) = sum c z_k over the stored
/// entries (a, b, k, c).
class Pairing {
 public:
  struct Entry {
    std::size_t left, right, out;
    mpz_class coefficient;
  };

  Pairing(ComodulePtr left, ComodulePtr right, ComodulePtr out, std::vector<Entry> entries);

  const ComodulePtr& left() const { return left_; }
  const ComodulePtr& right() const { return right_; }
  const ComodulePtr& out() const { return out_; }
  const std::vector<Entry>& entries() const { return entries_; }
  /// Value on basis vectors u_a (x) v_b as a sparse vector of Z.
  std::vector<std::pair<std::size_t, mpz_class>> value(std::size_t a, std::size_t b) const;

 private:
  ComodulePtr left_, right_, out_;
  std::vector<Entry> entries_;
};

/// k (x) k -> k for the trivial module.
Pairing trivial_pairing(const GroupPtr& group);
/// k (x) M -> M.
Pairing unit_pairing(const ComodulePtr& m);
/// U (x) V -> U (x) V.
Pairing tensor_pairing(const ComodulePtr& u, const ComodulePtr& v);
/// Gamma^m V (x) S^m(V^#) -> k, <e^[lambda], x^mu> = delta.
Pairing evaluation_pairing(const ComodulePtr& v, int m);
/// phi (x) id_W: U (x) (V (x) W) -> Z (x) W.
Pairing extend_right(const Pairing& phi, const ComodulePtr& w);
/// phi . (f (x) g): U' (x) V' -> Z for f: U' -> U and g: V' -> V.
Pairing pull_back(const Pairing& phi, const ComoduleMap& f, const ComoduleMap& g);
/// All three modules base-changed, coefficients reduced.
Pairing base_change(const Pairing& phi, const Ring& ring);

/// phi(rho_U (x) rho_V) == rho_Z phi; throws VerificationFailed with the failing entry.
void check_equivariant(const Pairing& phi);

/// (f u g)(g1..g_{i+j}) = phi(f(g1..gi) (x) (g1...gi) . g(g_{i+1}..g_{i+j})).
Cochain cup(const Cochain& f, const Cochain& g, const Pairing& phi);

}  // namespace sl2coh
