#include <gtest/gtest.h>

#include "sl2coh/classes/universal.hpp"
#include "sl2coh/classes/witt.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/hochschild/torus.hpp"

using namespace sl2coh;

TEST(Phi, SmallPrimes) {
  EXPECT_EQ(phi(2).to_string(), "X*Y");
  EXPECT_EQ(phi(3).to_string(), "X^2*Y + X*Y^2");
  EXPECT_EQ(phi(5).to_string(), "X^4*Y + 2*X^3*Y^2 + 2*X^2*Y^3 + X*Y^4");
  EXPECT_THROW(phi(4), InvalidArgument);
}

// Phi(X, Y) = sum_{0<k<p} binom(p, k)/p X^k Y^{p-k}, coefficient by coefficient.
TEST(Phi, BinomialOracle) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
    Polynomial f = phi(p);
    for (unsigned long k = 0; k <= p; ++k) {
      mpz_class want = (k == 0 || k == p) ? mpz_class(0) : mpz_class(binomial(p, k) / p);
      EXPECT_EQ(f.coefficient({static_cast<int>(k), static_cast<int>(p - k)}), want);
    }
  }
}

TEST(Witt, Examples) {
  EXPECT_EQ(witt_polynomial(2, 1).to_string(), "X*Y");
  EXPECT_EQ(witt_polynomial(2, 2).to_string(), "2*X^3*Y + 3*X^2*Y^2 + 2*X*Y^3");
  EXPECT_EQ(witt_polynomial(3, 1), phi(3));
}

TEST(Witt, CocycleAndCoboundaryRelation) {
  for (int p : {2, 3}) {
    for (int r : {1, 2}) {
      Cochain c = witt_cocycle(p, r);
      EXPECT_TRUE(is_cocycle(c));
      mpz_class q;
      mpz_pow_ui(q.get_mpz_t(), mpz_class(p).get_mpz_t(), r);
      EXPECT_EQ(c.scaled(p), differential(ga_power_cochain(q.get_ui()).scaled(-1)));
      EXPECT_EQ(reduce_mod(witt_polynomial(p, r), p), reduce_mod(phi_frobenius(p, r - 1), p));
    }
  }
}

TEST(Witt, CongruenceModP2) {
  EXPECT_TRUE(check_congruence_p2(2, 1));
  EXPECT_TRUE(check_congruence_p2(2, 2));
  EXPECT_TRUE(check_congruence_p2(3, 2));
  // at p = 2, r = 2 the difference is 4 X^3 Y + 4 X^2 Y^2 + 4 X Y^3
  Polynomial x = Polynomial::variable(xy_vars(), Ring::integers(), 0);
  Polynomial y = Polynomial::variable(xy_vars(), Ring::integers(), 1);
  Polynomial diff = (x + y).pow(4) - x.pow(4) - y.pow(4) - phi_frobenius(2, 1).scaled(2);
  EXPECT_EQ(diff.to_string(), "4*X^3*Y + 4*X^2*Y^2 + 4*X*Y^3");
  EXPECT_FALSE(reduce_mod(diff, 8).is_zero());
}

TEST(CupPower, Examples) {
  Cochain c2 = cup_power(2, 1, 2);
  EXPECT_EQ(c2.component(0).to_string(), "X1*X2*X3*X4");
  EXPECT_EQ(cup_power(2, 2, 1), witt_cocycle(2, 2));
  Cochain reduced = change_ring(cup_power(2, 2, 2), Ring::modulo(2));
  EXPECT_EQ(reduced.component(0).to_string(), "X1^2*X2^2*X3^2*X4^2");
  EXPECT_TRUE(is_cocycle(cup_power(3, 1, 2)));
}

TEST(Universal, SpecShape) {
  UniversalClassSpec s{2, 1, 0, 1};
  EXPECT_EQ(s.degree(), 2);
  EXPECT_EQ(s.coefficient_rank(), 10);
  Cochain f = universal_cochain(s);
  EXPECT_EQ(f.coefficients()->rank(), 10u);
  EXPECT_EQ(f.to_string(), "e21^[2]: X1*X2");
  EXPECT_EQ(universal_cochain({2, 2, 0, 1}).degree(), 4);
  Cochain f3 = universal_cochain({3, 1, 1, 1});
  EXPECT_EQ(f3.degree(), 2);
  EXPECT_EQ(f3.to_string(), "e21^[9]: " + witt_cocycle(3, 2).component(0).to_string());
}

TEST(Universal, SmallCaseEndToEnd) {
  for (UniversalClassSpec s : {UniversalClassSpec{2, 1, 0, 1}, UniversalClassSpec{2, 2, 0, 1},
                               UniversalClassSpec{2, 1, 0, 2}, UniversalClassSpec{3, 1, 0, 1}}) {
    Cochain f = universal_cochain(s);
    EXPECT_TRUE(is_cocycle(f)) << s.to_string();
    EXPECT_TRUE(is_T_invariant(f)) << s.to_string();
    EXPECT_NO_THROW(extend_to_borel(f, borel_coefficients(s))) << s.to_string();
    Cochain projected = project_universal_class(s);
    EXPECT_EQ(projected, displayed_universal_class(s)) << s.to_string();
    EXPECT_EQ(projected, project_universal_class_reduced_first(s)) << s.to_string();
    EXPECT_TRUE(is_cocycle(projected));
  }
}

TEST(Universal, GammaOneCollapse) {
  UniversalClassSpec s{2, 1, 0, 1};
  ComoduleMap f = universal_composition_map(s);
  for (std::size_t j = 0; j < f.source()->rank(); ++j) EXPECT_EQ(f.column(j), (MapColumn{{j, 1}}));
}
