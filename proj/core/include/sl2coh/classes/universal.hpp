#pragma once

#include <gmpxx.h>

#include <string>

#include "sl2coh/comodules/comodule_map.hpp"
#include "sl2coh/hochschild/cochain.hpp"

namespace sl2coh {

/// Parameters (p, r, j, m) of the universal class c_r[m]^(j).
struct UniversalClassSpec {
  mpz_class p;
  int r = 1;
  int j = 0;
  int m = 1;

  /// Throws InvalidArgument unless p is prime, r >= 1, j >= 0, m >= 1.
  void validate() const;
  /// 2 m p^{r-1}.
  int degree() const;
  /// N = m p^{r+j}.
  int coefficient_power() const;
  /// p^{r+j}.
  int inner_power() const;
  /// C(N + 3, 3).
  mpz_class coefficient_rank() const;
  std::string to_string() const;
};

/// x_alpha^* gl2 over the base ring, the module every universal coefficient is built from.
ComodulePtr root_gl2(const Ring& ring = Ring::integers());
/// Gamma^N(x_alpha^* gl2) over ZZ.
ComodulePtr universal_coefficients(const UniversalClassSpec& s);
/// Gamma^N of gl2 restricted to B in (x, u) coordinates.
ComodulePtr borel_coefficients(const UniversalClassSpec& s);

/// c_{j+1}^{u m p^{r-1}} (x) e_alpha^[N] on Ga over ZZ.
Cochain universal_cochain(const UniversalClassSpec& s);

/// Gamma^{m p^{r+j}} -> Gamma^m Gamma^{p^{r+j}} over ZZ on x_alpha^* gl2.
ComoduleMap universal_composition_map(const UniversalClassSpec& s);
/// Gamma^m of the twist projection Gamma^{p^{r+j}} -> (x_alpha^* gl2 mod p)^(r+j).
ComoduleMap universal_projection_map(const UniversalClassSpec& s);

/// The universal cochain pushed along the composition map, reduced mod p, then pushed along
/// Gamma^m of the twist projection.
Cochain project_universal_class(const UniversalClassSpec& s);
/// Same pushes with the reduction mod p done first.
Cochain project_universal_class_reduced_first(const UniversalClassSpec& s);
/// Phi(X^{p^j}, Y^{p^j})^{u m p^{r-1}} (x) e_alpha^{(r+j)[m]} over ZZ/p, built from Phi directly.
Cochain displayed_universal_class(const UniversalClassSpec& s);

}  // namespace sl2coh
