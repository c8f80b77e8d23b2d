#include <gtest/gtest.h>

#include <random>

#include "sl2coh/errors.hpp"
#include "sl2coh/hochschild/bounded.hpp"
#include "sl2coh/hochschild/cup.hpp"
#include "sl2coh/hochschild/torus.hpp"

using namespace sl2coh;

namespace {

const Ring ZZ = Ring::integers();

GroupPtr ga(const Ring& r = ZZ) { return make_group(GroupKind::Ga, r); }

Polynomial var(const VarsPtr& v, const char* name, const Ring& r = ZZ) {
  return Polynomial::variable(v, r, name);
}

Cochain scalar_cochain(const GroupPtr& g, int n, const Polynomial& f) {
  return Cochain(trivial_comodule(g), n, {f});
}

Polynomial random_poly(std::mt19937& rng, const VarsPtr& vars, const Ring& ring, int max_exp,
                       int terms, bool laurent_ok) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial f(vars, ring);
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars->size());
    for (std::size_t i = 0; i < e.size(); ++i) {
      const int lo = (laurent_ok && (*vars)[i].laurent) ? -max_exp : 0;
      e[i] = std::uniform_int_distribution<int>(lo, max_exp)(rng);
    }
    f.add_term(e, coeff(rng));
  }
  return f;
}

Cochain random_cochain(std::mt19937& rng, const ComodulePtr& m, int n) {
  const GroupScheme& g = *m->group();
  std::vector<Polynomial> comps;
  for (std::size_t i = 0; i < m->rank(); ++i)
    comps.push_back(random_poly(rng, g.copies(n), m->ring(), 2, 3, true));
  return Cochain(m, n, comps);
}

}  // namespace

TEST(Differential, WittCoboundary) {
  auto g = ga();
  auto one = g->copies(1);
  Cochain f = scalar_cochain(g, 1, var(one, "X").pow(4));
  auto two = g->copies(2);
  auto x = var(two, "X1"), y = var(two, "X2");
  EXPECT_EQ(differential(f).component(0), y.pow(4) - (x + y).pow(4) + x.pow(4));
}

TEST(Differential, ConstantsAndCharacters) {
  auto g = ga();
  auto gl2 = restrict(gl2_conjugation(), root_hom());
  Cochain id = Cochain::vector(gl2, {1, 0, 0, 1});
  EXPECT_TRUE(is_cocycle(id));
  EXPECT_TRUE(is_cocycle(scalar_cochain(g, 1, var(g->copies(1), "X"))));
  EXPECT_FALSE(is_cocycle(scalar_cochain(g, 2, var(g->copies(2), "X1"))));
  EXPECT_TRUE(is_cocycle(scalar_cochain(g, 2, var(g->copies(2), "X1") * var(g->copies(2), "X2"))));
}

TEST(Differential, SquareIsZeroOnAllGroups) {
  std::mt19937 rng(7);
  auto gl2 = gl2_conjugation();
  std::vector<ComodulePtr> modules = {
      gl2, restrict(gl2, root_hom()), restrict(gl2, torus_hom()), restrict(gl2, borel_hom()),
      restrict(gl2, borel_xu_hom())};
  for (const auto& m : modules)
    for (int n = 0; n <= 2; ++n)
      for (int rep = 0; rep < 3; ++rep) {
        Cochain f = random_cochain(rng, m, n);
        EXPECT_TRUE(differential(differential(f)).is_zero()) << m->descriptor() << " n=" << n;
      }
}

TEST(Cup, WittSquare) {
  auto g = ga();
  auto two = g->copies(2);
  Cochain c = scalar_cochain(g, 2, var(two, "X1") * var(two, "X2"));
  Cochain c2 = cup(c, c, trivial_pairing(g));
  auto four = g->copies(4);
  EXPECT_EQ(c2.component(0), var(four, "X1") * var(four, "X2") * var(four, "X3") * var(four, "X4"));
  EXPECT_TRUE(is_cocycle(c2));
}

TEST(Cup, UnitIsRightIdentity) {
  auto m = restrict(gl2_conjugation(), root_hom());
  std::mt19937 rng(3);
  Cochain f = random_cochain(rng, m, 2);
  Cochain one = Cochain::vector(trivial_comodule(m->group()), {1});
  Pairing right_unit(m, one.coefficients(), m, [&] {
    std::vector<Pairing::Entry> e;
    for (std::size_t a = 0; a < m->rank(); ++a) e.push_back({a, 0, a, 1});
    return e;
  }());
  EXPECT_EQ(cup(f, one, right_unit), f);
}

TEST(Cup, LeibnizRandom) {
  std::mt19937 rng(11);
  auto m = restrict(gl2_conjugation(), root_hom());
  Pairing phi = tensor_pairing(m, m);
  check_equivariant(phi);
  for (int rep = 0; rep < 6; ++rep) {
    const int i = rep % 3, j = (rep / 3) + 1;
    Cochain f = random_cochain(rng, m, i), g = random_cochain(rng, m, j);
    Cochain lhs = differential(cup(f, g, phi));
    Cochain rhs = cup(differential(f), g, phi) + cup(f, differential(g), phi).scaled(i % 2 ? -1 : 1);
    EXPECT_EQ(lhs, rhs) << "degrees " << i << "," << j;
  }
}

TEST(Cup, LeibnizOnSL2) {
  std::mt19937 rng(5);
  auto gl2 = gl2_conjugation();
  Pairing phi = tensor_pairing(gl2, gl2);
  Cochain f = random_cochain(rng, gl2, 1), g = random_cochain(rng, gl2, 1);
  EXPECT_EQ(differential(cup(f, g, phi)),
            cup(differential(f), g, phi) - cup(f, differential(g), phi));
}

TEST(Pairings, EvaluationIsEquivariant) {
  auto gl2 = gl2_conjugation();
  check_equivariant(evaluation_pairing(gl2, 1));
  check_equivariant(evaluation_pairing(gl2, 2));
  check_equivariant(unit_pairing(gl2));
}

TEST(Torus, WeightBookkeeping) {
  auto g = ga();
  auto m = div_power(restrict(gl2_conjugation(), root_hom()), 2);
  std::size_t idx = *m->index_of_multiset({0, 2, 0, 0});
  auto two = g->copies(2);
  Cochain f = Cochain::single(m, 2, idx, var(two, "X1") * var(two, "X2"));
  EXPECT_TRUE(is_T_invariant(f));
  Cochain h = Cochain::single(m, 1, idx, var(g->copies(1), "X"));
  EXPECT_FALSE(is_T_invariant(h));
  EXPECT_FALSE(is_T_invariant(scalar_cochain(g, 1, var(g->copies(1), "X"))));
  EXPECT_THROW(is_T_invariant(Cochain(make_comodule("plain", g, {"v"},
                                                    {{{0, Polynomial::constant(g->copies(1), ZZ, 1)}}}),
                                      0, {Polynomial::constant(g->copies(0), ZZ, 1)})),
               InvalidArgument);
}

TEST(Torus, ActionComposes) {
  auto g = ga();
  auto m = restrict(gl2_conjugation(), root_hom());
  std::mt19937 rng(9);
  Cochain f = random_cochain(rng, m, 2);
  Cochain tt = torus_act(torus_act(f, "u"), "v");
  Cochain w = torus_act(f, "w");
  // substitute w -> u v
  VarsPtr target = tt.vars();
  std::vector<Polynomial> values;
  for (std::size_t k = 0; k < 2; ++k) values.push_back(Polynomial::variable(target, ZZ, k));
  values.push_back(Polynomial::variable(target, ZZ, "u") * Polynomial::variable(target, ZZ, "v"));
  std::vector<Polynomial> comps;
  for (const auto& c : w.components()) comps.push_back(substitute(c, values, target));
  EXPECT_EQ(Cochain(m, 2, comps, tt.params()), tt);
}

TEST(Borel, ExtendsWeightZeroClass) {
  auto g = ga();
  auto root = div_power(restrict(gl2_conjugation(), root_hom()), 2);
  auto borel = div_power(restrict(gl2_conjugation(), borel_xu_hom()), 2);
  std::size_t idx = *root->index_of_multiset({0, 2, 0, 0});
  auto two = g->copies(2);
  Cochain f = Cochain::single(root, 2, idx, var(two, "X1") * var(two, "X2"));
  Cochain fb = extend_to_borel(f, borel);
  auto btwo = borel->group()->copies(2);
  Polynomial expected = var(btwo, "x1") * var(btwo, "x2") * Polynomial::monomial(btwo, ZZ, {0, -2, 0, 0});
  EXPECT_EQ(fb.component(idx), expected);
  EXPECT_EQ(restrict_to_root(fb, root), f);

  std::vector<mpz_class> alpha(root->rank(), 0);
  alpha[idx] = 1;
  Cochain v = Cochain::vector(root, alpha);
  EXPECT_THROW(extend_to_borel(v, borel), InvalidArgument);
}

TEST(Borel, RejectsNonInvariant) {
  auto g = ga();
  auto root = div_power(restrict(gl2_conjugation(), root_hom()), 2);
  auto borel = div_power(restrict(gl2_conjugation(), borel_xu_hom()), 2);
  std::size_t idx = *root->index_of_multiset({0, 2, 0, 0});
  Cochain h = Cochain::single(root, 1, idx, var(g->copies(1), "X"));
  EXPECT_THROW(extend_to_borel(h, borel), InvalidArgument);
}

TEST(CoefficientMaps, CommuteWithDifferential) {
  std::mt19937 rng(13);
  auto w = restrict(gl2_conjugation(), root_hom());
  ComoduleMap phi = gamma_composition_map(w, 2, 1);
  Cochain f = random_cochain(rng, phi.source(), 1);
  EXPECT_EQ(apply_coefficient_map(differential(f), phi), differential(apply_coefficient_map(f, phi)));
  EXPECT_EQ(apply_coefficient_map(f, identity_map(f.coefficients())), f);
  EXPECT_TRUE(apply_coefficient_map(f, zero_map(f.coefficients(), w)).is_zero());
}

TEST(Bounded, SmallPieces) {
  auto h22 = bounded_cohomology_Ga(2, 2, 2);
  EXPECT_EQ(h22.coboundary_dim, 0u);
  EXPECT_GE(h22.dimension(), 1u);
  auto h11 = bounded_cohomology_Ga(2, 1, 1);
  EXPECT_GE(h11.dimension(), 1u);
  EXPECT_EQ(bounded_cohomology_Ga(2, 2, 1).dimension(), 0u);
  auto gp = ga(Ring::modulo(2));
  auto two = gp->copies(2);
  Cochain xy = scalar_cochain(gp, 2, var(two, "X1", Ring::modulo(2)) * var(two, "X2", Ring::modulo(2)));
  EXPECT_FALSE(is_coboundary_Ga(xy));
}

TEST(Bounded, DifferentialPreservesDegree) {
  auto g = ga(Ring::modulo(3));
  for (int d = 1; d <= 4; ++d)
    for (const auto& e : monomials_of_degree(2, d)) {
      Cochain f = scalar_cochain(g, 2, Polynomial::monomial(g->copies(2), g->ring(), e));
      Polynomial c = differential(f).component(0);
      EXPECT_TRUE(c.is_zero() || c.is_homogeneous(d)) << c.to_string() << " d=" << d;
    }
}
