#include <gtest/gtest.h>

#include <random>

#include "sl2coh/errors.hpp"
#include "sl2coh/pairlat/pairing_diagram.hpp"

using namespace sl2coh;

namespace {

mpz_class product(const std::vector<mpz_class>& v) {
  mpz_class out = 1;
  for (const auto& x : v) out *= x;
  return out;
}

bool is_pure(const Exponents& e) {
  int nonzero = 0;
  for (int x : e) nonzero += x != 0;
  return nonzero == 1;
}

}  // namespace

TEST(XMap, PurePowersOnly) {
  ComoduleMap f = build_X_map(2, 1);
  EXPECT_EQ(f.source()->rank(), 10u);
  EXPECT_EQ(f.target()->rank(), 4u);
  EXPECT_EQ(rank_mod(f.to_matrix(), 2), 4u);
  for (std::size_t j = 0; j < 10; ++j) {
    const Exponents& e = f.source()->multisets()[j];
    if (is_pure(e)) {
      ASSERT_EQ(f.column(j).size(), 1u);
      std::size_t i = 0;
      while (e[i] == 0) ++i;
      EXPECT_EQ(f.column(j)[0], (std::pair<std::size_t, mpz_class>{i, 1}));
    } else {
      EXPECT_TRUE(f.column(j).empty()) << f.source()->labels()[j];
    }
  }
  EXPECT_EQ(build_X_map(3, 1).source()->rank(), 20u);
  EXPECT_EQ(rank_mod(build_X_map(3, 1).to_matrix(), 3), 4u);
}

TEST(KLattice, IndexBySmithForm) {
  for (int p : {2, 3}) {
    IntegerLattice k = build_K(p, 1);
    mpz_class p4 = p * p * p * p;
    EXPECT_EQ(product(smith_invariants(k.basis())), p4);
    EXPECT_EQ(k.index(), p4);
    // p X is inside K
    for (std::size_t i = 0; i < k.ambient_dim(); ++i) {
      std::vector<mpz_class> v(k.ambient_dim());
      v[i] = p;
      EXPECT_TRUE(k.contains(v));
    }
  }
}

TEST(KLattice, MixedMonomialsAndPurePowers) {
  PairingLattices d = pairing_lattices(2, 1);
  const auto& ms = d.x->multisets();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    std::vector<mpz_class> v(ms.size());
    v[i] = 1;
    EXPECT_EQ(d.k.contains(v), !is_pure(ms[i])) << d.x->labels()[i];
  }
  EXPECT_NO_THROW(induced_subcomodule(d.x, d.k));
}

TEST(YLattice, DualityWithK) {
  for (int p : {2, 3}) {
    PairingLattices d = pairing_lattices(p, 1);
    const std::size_t n = d.x->rank();
    // [X^# : Y] = p^(n-4), so Y / p X^# has dimension 4
    mpz_class want;
    mpz_pow_ui(want.get_mpz_t(), mpz_class(p).get_mpz_t(), n - 4);
    EXPECT_EQ(d.y.index(), want);
    EXPECT_EQ(product(smith_invariants(d.y.basis())), want);
    // every basis functional sends every basis vector of K into pZZ
    const IntegerMatrix& kb = d.k.basis();
    const IntegerMatrix& yb = d.y.basis();
    for (std::size_t a = 0; a < yb.rows(); ++a)
      for (std::size_t b = 0; b < kb.rows(); ++b) {
        mpz_class v = 0;
        for (std::size_t t = 0; t < n; ++t) v += yb(a, t) * kb(b, t);
        EXPECT_EQ(v % p, 0);
      }
    // the coefficient of e21^[p] lies in Y
    std::vector<mpz_class> alpha(n);
    Exponents e(4, 0);
    e[1] = p;
    alpha[*d.x->index_of_multiset(e)] = 1;
    EXPECT_TRUE(d.y.contains(alpha));
  }
}

// f is in Y iff f mod p factors through pi, i.e. f == g . pi + p h.
TEST(YLattice, MaximalityOnRandomCandidates) {
  std::mt19937_64 rng(20240611);
  for (int p : {2, 3}) {
    PairingLattices d = pairing_lattices(p, 1);
    const IntegerMatrix a = d.projection.to_matrix();
    const std::size_t n = d.x->rank();
    std::uniform_int_distribution<int> small(-5, 5);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<mpz_class> f(n);
      std::vector<int> g(a.rows());
      for (auto& x : g) x = small(rng);
      for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t i = 0; i < a.rows(); ++i) f[t] += g[i] * a(i, t);
        f[t] += p * small(rng);
      }
      EXPECT_TRUE(d.y.contains(f));
      // a functional that is odd on a mixed monomial is not in Y
      std::vector<mpz_class> bad = f;
      for (std::size_t t = 0; t < n; ++t)
        if (!is_pure(d.x->multisets()[t])) {
          bad[t] += 1;
          break;
        }
      EXPECT_FALSE(d.y.contains(bad));
    }
  }
}

TEST(YLattice, SurjectsOntoTwistedDual) {
  for (int p : {2, 3}) {
    PairingLattices d = pairing_lattices(p, 1);
    EXPECT_EQ(rank_mod(d.y_reduction.to_matrix(), p), 4u);
    EXPECT_NO_THROW(check_equivariant(d.y_reduction));
    EXPECT_NO_THROW(check_equivariant(d.y_inclusion));
  }
}

TEST(TopPairing, DegreeOneIsEvaluation) {
  PairingLattices d = pairing_lattices(2, 1);
  Pairing top = top_pairing(d, 1);
  const IntegerMatrix& yb = d.y.basis();
  for (std::size_t l = 0; l < d.x->rank(); ++l)
    for (std::size_t s = 0; s < yb.rows(); ++s) {
      auto v = top.value(l, s);
      mpz_class got = v.empty() ? mpz_class(0) : v[0].second;
      EXPECT_EQ(got, yb(s, l));
    }
}

TEST(TopPairing, Equivariant) {
  EXPECT_NO_THROW(check_equivariant(top_pairing(2, 1, 1)));
  EXPECT_NO_THROW(check_equivariant(top_pairing(2, 1, 2)));
}

TEST(Diagram, Commutes) {
  for (int p : {2, 3})
    for (int m : {1, 2}) {
      DiagramCheck c = diagram_commutes(p, 1, m);
      EXPECT_TRUE(c.commutes) << c.witness.value_or("");
      EXPECT_TRUE(c.left_surjective);
      DiagramCheck c2 = diagram_commutes(p, 1, m, Ring::modulo(p * p));
      EXPECT_TRUE(c2) << c2.witness.value_or("");
    }
}

TEST(Diagram, DetectsBrokenVertical) {
  PairingLattices d = pairing_lattices(2, 1);
  // send every functional to e11#
  std::vector<MapColumn> cols(d.y_reduction.columns().size());
  for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = {{0, 1}};
  d.y_reduction = ComoduleMap(d.y_reduction.source(), d.y_reduction.target(), cols);
  DiagramCheck c = check_diagram(d, 1);
  EXPECT_FALSE(c.commutes);
  EXPECT_TRUE(c.witness.has_value());
}

TEST(Diagram, DoubledGl2) {
  for (int p : {2, 3}) {
    PairingLattices d = doubled_gl2_lattices(p);
    EXPECT_EQ(d.k.index(), mpz_class(p * p * p * p));
    EXPECT_EQ(rank_mod(d.y_reduction.to_matrix(), p), 4u);
    for (int m : {1, 2}) {
      EXPECT_TRUE(check_diagram(d, m)) << check_diagram(d, m).witness.value_or("");
      EXPECT_TRUE(check_diagram(d, m, Ring::modulo(p * p)));
    }
  }
}

TEST(Diagram, RejectsForeignBase) {
  PairingLattices d = pairing_lattices(2, 1);
  EXPECT_THROW(check_diagram(d, 1, Ring::modulo(6)), InvalidArgument);
}
