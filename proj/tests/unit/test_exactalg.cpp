#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sl2coh/errors.hpp"
#include "sl2coh/exactalg/lattice.hpp"
#include "sl2coh/exactalg/polynomial.hpp"

using namespace sl2coh;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntegerMatrix a(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

VarsPtr xy() { return make_vars({{"X"}, {"Y"}}); }

}  // namespace

TEST(Polynomial, RenderingIsGradedLex) {
  auto v = xy();
  auto x = Polynomial::variable(v, Ring::integers(), 0), y = Polynomial::variable(v, Ring::integers(), 1);
  EXPECT_EQ(((x + y).pow(4) - x.pow(4) - y.pow(4)).to_string(), "4*X^3*Y + 6*X^2*Y^2 + 4*X*Y^3");
  EXPECT_EQ((x * y - y + Polynomial::constant(v, Ring::integers(), 3)).to_string(), "X*Y - Y + 3");
  EXPECT_EQ(Polynomial(v, Ring::integers()).to_string(), "0");
}

TEST(Polynomial, ModularCoefficientsStayCanonical) {
  auto v = xy();
  Ring z4 = Ring::modulo(4);
  auto x = Polynomial::variable(v, z4, 0), y = Polynomial::variable(v, z4, 1);
  Polynomial f = (x + y).pow(4);
  EXPECT_EQ(f.to_string(), "X^4 + 2*X^2*Y^2 + Y^4");
  EXPECT_EQ((x - y).to_string(), "X + 3*Y");
  EXPECT_THROW(x + Polynomial::variable(v, Ring::integers(), 0), RingMismatch);
}

TEST(Polynomial, ExactDivisionAndReduction) {
  auto v = xy();
  auto x = Polynomial::variable(v, Ring::integers(), 0), y = Polynomial::variable(v, Ring::integers(), 1);
  Polynomial f = (x + y).pow(3) - x.pow(3) - y.pow(3);
  EXPECT_EQ(exact_div_scalar(f, 3).to_string(), "X^2*Y + X*Y^2");
  EXPECT_THROW(exact_div_scalar(f + x, 3), NotDivisible);
  EXPECT_TRUE(reduce_mod(f, 3).is_zero());
  EXPECT_EQ(change_ring(reduce_mod(f + x, 9), Ring::modulo(3)).to_string(), "X");
}

TEST(Polynomial, SubstitutionAndLaurent) {
  auto v = make_vars({{"X"}, {"u", true}});
  auto x = Polynomial::variable(v, Ring::integers(), 0), u = Polynomial::variable(v, Ring::integers(), 1);
  Polynomial f = Polynomial::monomial(v, Ring::integers(), {2, -1});
  std::vector<Polynomial> vals{x * u, u};
  EXPECT_EQ(substitute(f, vals, v).to_string(), "X^2*u");
  std::vector<Polynomial> bad{x, x + u};
  EXPECT_THROW(substitute(f, bad, v), SubstitutionError);
  EXPECT_THROW(Polynomial::monomial(xy(), Ring::integers(), {-1, 0}), SubstitutionError);
}

// Substitution into a sum agrees with binomial expansion.
TEST(Polynomial, SubstitutionMatchesBinomial) {
  auto one = make_vars({{"X"}});
  auto two = make_vars({{"A"}, {"B"}});
  Polynomial f = Polynomial::variable(one, Ring::integers(), 0).pow(7);
  std::vector<Polynomial> vals{Polynomial::variable(two, Ring::integers(), 0) + Polynomial::variable(two, Ring::integers(), 1)};
  Polynomial g = substitute(f, vals, two);
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(g.coefficient({k, 7 - k}), binomial(7, k));
}

TEST(Hermite, MatchesNaiveOracle) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  for (int t = 0; t < 200; ++t) {
    IntegerMatrix a = random_matrix(rng, dim(rng), dim(rng), t % 3 == 0 ? 2 : 20);
    if (t % 5 == 0 && a.rows() > 1)
      for (std::size_t j = 0; j < a.cols(); ++j) a(a.rows() - 1, j) = 2 * a(0, j);
    HermiteResult h = hnf(a);
    EXPECT_EQ(h.form, oracle::naive_hnf(a)) << a.to_string();
    EXPECT_EQ(h.transform * a, h.form);
  }
}

TEST(Hermite, KnownExample) {
  IntegerMatrix a{{2, 3, 6, 2}, {5, 6, 1, 6}, {8, 3, 1, 1}};
  IntegerMatrix want{{1, 0, 50, -11}, {0, 3, 28, -2}, {0, 0, 61, -13}};
  EXPECT_EQ(hnf(a).form, want);
  EXPECT_EQ(oracle::naive_hnf(a), want);
}

TEST(Smith, ProductIsDeterminant) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = dim(rng);
    IntegerMatrix a = random_matrix(rng, n, n, 6);
    mpz_class det = abs(oracle::cofactor_determinant(a));
    auto inv = smith_invariants(a);
    if (det == 0) {
      EXPECT_LT(inv.size(), n);
      continue;
    }
    mpz_class prod = 1;
    for (std::size_t i = 0; i < inv.size(); ++i) {
      prod *= inv[i];
      if (i > 0) EXPECT_EQ(inv[i] % inv[i - 1], 0);
    }
    EXPECT_EQ(prod, det) << a.to_string();
  }
  EXPECT_EQ(smith_invariants(IntegerMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}),
            (std::vector<mpz_class>{2, 6, 12}));
}

TEST(ModP, RankAndKernel) {
  IntegerMatrix a{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  EXPECT_EQ(rank_mod(a, 2), 2u);
  EXPECT_EQ(rank_mod(a, 3), 3u);
  IntegerMatrix k = kernel_mod(a, 2);
  ASSERT_EQ(k.rows(), 1u);
  EXPECT_EQ(k.row_vector(0), (std::vector<mpz_class>{1, 1, 1}));
}

TEST(IntegerKernel, Saturated) {
  IntegerMatrix a{{2, 4, 6}};
  IntegerMatrix k = integer_kernel(a);
  EXPECT_EQ(k.rows(), 2u);
  EXPECT_EQ(a * k.transpose(), IntegerMatrix(1, 2));
  EXPECT_EQ(smith_invariants(k), (std::vector<mpz_class>{1, 1}));
}

TEST(Lattice, MembershipCoordinatesIndex) {
  IntegerLattice l = IntegerLattice::from_generators(IntegerMatrix{{2, 0}, {1, 3}});
  EXPECT_EQ(l.index(), 6);
  std::vector<mpz_class> v{3, 3}, w{1, 0};
  EXPECT_TRUE(l.contains(v));
  EXPECT_FALSE(l.contains(w));
  auto c = l.coordinates(v);
  ASSERT_TRUE(c.has_value());
  mpz_class x = (*c)[0] * l.basis()(0, 0) + (*c)[1] * l.basis()(1, 0);
  EXPECT_EQ(x, 3);
  EXPECT_TRUE(l.contains(IntegerLattice::from_generators(IntegerMatrix{{4, 0}, {0, 6}})));
}

TEST(Lattice, PreimageModP) {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 50; ++t) {
    IntegerMatrix a = random_matrix(rng, 3, 5, 4);
    for (int p : {2, 3, 5}) {
      IntegerLattice l = lattice_preimage_mod(a, p);
      mpz_class want;
      mpz_pow_ui(want.get_mpz_t(), mpz_class(p).get_mpz_t(), rank_mod(a, p));
      EXPECT_EQ(l.index(), want);
      for (std::size_t i = 0; i < 5; ++i) {
        std::vector<mpz_class> e(5);
        e[i] = p;
        EXPECT_TRUE(l.contains(e));
      }
    }
  }
}

TEST(Lattice, Saturation) {
  IntegerLattice s = saturation(IntegerMatrix{{2, 4, 6}, {0, 3, 3}});
  std::vector<mpz_class> v{1, 2, 3}, w{0, 1, 1};
  EXPECT_TRUE(s.contains(v));
  EXPECT_TRUE(s.contains(w));
  EXPECT_EQ(s.rank(), 2u);
}
