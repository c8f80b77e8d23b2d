#pragma once

#include <string>

#include "sl2coh/hochschild/cochain.hpp"

namespace sl2coh {

/// t . f for a generic torus point t = diag(u, 1/u) with u a new Laurent parameter named
/// `param`: every root coordinate X_i becomes u^2 X_i and component i is multiplied by
/// u^{weight_i}. `f` must live on Ga with weighted coefficients.
Cochain torus_act(const Cochain& f, const std::string& param = "u");
/// t . f == f as polynomials in u and the X_i.
bool is_T_invariant(const Cochain& f);

/// Extends a T-invariant U_alpha-cocycle to the Borel group in (x, u) coordinates:
/// f_B(b1..bn) = f(x1, u1^-2 x2, (u1 u2)^-2 x3, ...), with coefficients `borel_coeffs`
/// (which must restrict along root_into_borel to f's coefficients). The result is verified
/// to be a cocycle restricting to f at u = 1; otherwise VerificationFailed carries d f_B.
Cochain extend_to_borel(const Cochain& f, const ComodulePtr& borel_coeffs);

/// Restriction of a B[x,u]-cochain to U_alpha (u_i = 1, x_i = X_i).
Cochain restrict_to_root(const Cochain& fb, const ComodulePtr& root_coeffs);

}  // namespace sl2coh
