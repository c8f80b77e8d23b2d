#pragma once

#include <gmpxx.h>

#include "sl2coh/hochschild/cochain.hpp"
#include "sl2coh/hochschild/cup.hpp"

namespace sl2coh {

/// The variable list {X, Y}.
VarsPtr xy_vars();

/// Phi(X, Y) with (X + Y)^p = X^p + Y^p + p Phi(X, Y), over ZZ in X, Y.
Polynomial phi(const mpz_class& p);
/// Phi(X^{p^s}, Y^{p^s}).
Polynomial phi_frobenius(const mpz_class& p, int s);
/// ((X + Y)^{p^r} - X^{p^r} - Y^{p^r}) / p in X, Y.
Polynomial witt_polynomial(const mpz_class& p, int r);

/// A polynomial in X, Y read as a 2-cochain on Ga over `ring` with trivial coefficients.
Cochain ga_two_cochain(const Polynomial& f_xy, const Ring& ring = Ring::integers());
/// The cochain X^k in degree 1 on Ga over ZZ.
Cochain ga_power_cochain(unsigned long k);
/// Renames X1, X2 of a 2-cochain component back to X, Y.
Polynomial as_xy(const Cochain& f);

/// c_r as a 2-cochain on Ga over ZZ.
Cochain witt_cocycle(const mpz_class& p, int r);

/// (X+Y)^{p^r} - X^{p^r} - Y^{p^r} - p Phi(X^{p^{r-1}}, Y^{p^{r-1}}) vanishes mod p^2.
bool check_congruence_p2(const mpz_class& p, int r);

/// f u f u ... u f (m factors) for a cochain with trivial coefficients.
Cochain cup_power(const Cochain& f, int m);
/// c_r^{u m}.
Cochain cup_power(const mpz_class& p, int r, int m);

}  // namespace sl2coh
