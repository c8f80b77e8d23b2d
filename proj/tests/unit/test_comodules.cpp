#include <gtest/gtest.h>

#include "sl2coh/comodules/comodule.hpp"
#include "sl2coh/comodules/comodule_map.hpp"
#include "sl2coh/errors.hpp"

using namespace sl2coh;

TEST(Gl2, AlphaColumnIsConjugation) {
  auto gl2 = gl2_conjugation();
  const auto& vars = gl2->group()->copies(1);
  auto v = [&](const char* n) { return Polynomial::variable(vars, Ring::integers(), n); };
  EXPECT_EQ(gl2->entry(kE11, kEAlpha), v("b") * v("d"));
  EXPECT_EQ(gl2->entry(kEAlpha, kEAlpha), v("d") * v("d"));
  EXPECT_EQ(gl2->entry(kEMinusAlpha, kEAlpha), -(v("b") * v("b")));
  EXPECT_EQ(gl2->entry(kE22, kEAlpha), -(v("b") * v("d")));
  EXPECT_EQ(*gl2->weights(), (std::vector<int>{0, -2, 2, 0}));
}

TEST(Gl2, ComoduleAxioms) {
  auto gl2 = gl2_conjugation();
  check_coassociative(*gl2);
  check_counit(*gl2);
  check_coassociative(*dual(gl2));
  check_counit(*dual(gl2));
}

TEST(Functors, GammaAndSymRanks) {
  auto gl2 = gl2_conjugation();
  for (int m = 0; m <= 4; ++m) {
    EXPECT_EQ(div_power(gl2, m)->rank(), binomial(m + 3, 3).get_ui());
    EXPECT_EQ(sym_power(gl2, m)->rank(), binomial(m + 3, 3).get_ui());
  }
}

TEST(Functors, GammaAxioms) {
  auto gl2 = gl2_conjugation();
  for (int m = 1; m <= 3; ++m) {
    check_coassociative(*div_power(gl2, m));
    check_counit(*div_power(gl2, m));
    check_coassociative(*sym_power(gl2, m));
  }
}

TEST(Functors, RestrictionCommutesWithGamma) {
  auto gl2 = gl2_conjugation();
  GroupHom phi = root_hom();
  for (int n = 1; n <= 3; ++n)
    EXPECT_TRUE(structurally_equal(*restrict(div_power(gl2, n), phi),
                                   *div_power(restrict(gl2, phi), n)));
}

TEST(Functors, ModPCommutesWithGamma) {
  auto gl2 = gl2_conjugation();
  auto a = mod_p(div_power(gl2, 2), 3);
  auto b = div_power(mod_p(gl2, 3), 2);
  EXPECT_TRUE(same_comodule(a, b));
  check_coassociative(*a);
}

TEST(Functors, TwistAxioms) {
  auto gl2p = mod_p(gl2_conjugation(), 2);
  auto t = frobenius_twist(gl2p, 1);
  check_coassociative(*t);
  check_counit(*t);
  EXPECT_THROW(frobenius_twist(gl2_conjugation(), 1), RingMismatch);
}

TEST(Subcomodule, AlphaGeneratesRankThree) {
  auto gl2 = gl2_conjugation();
  std::vector<mpz_class> ealpha{0, 1, 0, 0};
  auto gen = generated_subcomodule(gl2, ealpha);
  EXPECT_EQ(gen.lattice.rank(), 3u);
  check_coassociative(*gen.module);
  check_counit(*gen.module);
  std::vector<mpz_class> id{1, 0, 0, 1};
  EXPECT_EQ(generated_subcomodule(gl2, id).lattice.rank(), 1u);
}

namespace {

ComodulePtr free_trivial(std::size_t rank) {
  GroupPtr ga = make_group(GroupKind::Ga);
  std::vector<CoactionColumn> cols(rank);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rank; ++i) {
    cols[i] = {{i, Polynomial::constant(ga->copies(1), Ring::integers(), 1)}};
    labels.push_back("v" + std::to_string(i));
  }
  return make_comodule("triv" + std::to_string(rank), ga, labels, cols);
}

// x^[mN] -> (x^[N])^[m] for a generic x = sum a_i e_i, as a polynomial identity in the a_i.
void expect_composition_law(const ComodulePtr& v, int m, int n) {
  ComoduleMap f = gamma_composition_map(v, m, n);
  VariableList names;
  for (std::size_t i = 0; i < v->rank(); ++i) names.push_back({"a" + std::to_string(i)});
  VarsPtr vars = make_vars(names);
  const Polynomial one = Polynomial::constant(vars, Ring::integers(), 1);
  LinearCombination x;
  for (std::size_t i = 0; i < v->rank(); ++i)
    x.emplace_back(i, Polynomial::variable(vars, Ring::integers(), i));

  std::vector<Polynomial> lhs_in(f.source()->rank(), Polynomial(vars, Ring::integers()));
  for (const auto& [key, c] : divided_power_of(x, v->rank(), m * n, one))
    lhs_in[*f.source()->index_of_multiset(key)] = c;
  std::vector<Polynomial> lhs = f.apply(lhs_in);

  ComodulePtr inner = div_power(v, n);
  LinearCombination y;
  for (const auto& [key, c] : divided_power_of(x, v->rank(), n, one))
    y.emplace_back(*inner->index_of_multiset(key), c);
  std::vector<Polynomial> rhs(f.target()->rank(), Polynomial(vars, Ring::integers()));
  for (const auto& [key, c] : divided_power_of(y, inner->rank(), m, one))
    rhs[*f.target()->index_of_multiset(key)] = c;
  EXPECT_EQ(lhs, rhs) << "m=" << m << " N=" << n;
}

}  // namespace

TEST(GammaComposition, PolynomialLaw) {
  expect_composition_law(free_trivial(2), 2, 2);
  expect_composition_law(free_trivial(3), 2, 3);
  expect_composition_law(free_trivial(2), 3, 2);
  expect_composition_law(free_trivial(1), 4, 2);
}

TEST(GammaComposition, DegenerateCases) {
  auto v = free_trivial(3);
  ComoduleMap f = gamma_composition_map(v, 1, 3);
  for (std::size_t j = 0; j < f.source()->rank(); ++j) EXPECT_EQ(f.column(j), (MapColumn{{j, 1}}));
  auto r1 = gamma_composition_map(free_trivial(1), 3, 2);
  EXPECT_EQ(r1.to_matrix(), (IntegerMatrix{{1}}));
}

TEST(GammaComposition, PureDividedPower) {
  auto gl2 = gl2_conjugation();
  ComoduleMap f = gamma_composition_map(gl2, 2, 3);
  Exponents pure{0, 6, 0, 0};
  Exponents inner_pure{0, 3, 0, 0};
  auto inner = div_power(gl2, 3);
  Exponents kappa(inner->rank(), 0);
  kappa[*inner->index_of_multiset(inner_pure)] = 2;
  EXPECT_EQ(f.column(*f.source()->index_of_multiset(pure)),
            (MapColumn{{*f.target()->index_of_multiset(kappa), 1}}));
}

TEST(GammaComposition, Equivariant) {
  check_equivariant(gamma_composition_map(gl2_conjugation(), 2, 2));
}

TEST(TwistProjection, PurePowersOnly) {
  for (int p : {2, 3}) {
    auto gbar = mod_p(gl2_conjugation(), p);
    ComoduleMap f = twist_projection(gbar, 1);
    check_equivariant(f);
    std::size_t nonzero = 0;
    for (const auto& col : f.columns()) nonzero += col.size();
    EXPECT_EQ(nonzero, 4u);
  }
  auto gbar = mod_p(gl2_conjugation(), 2);
  ComoduleMap id = twist_projection(gbar, 0);
  EXPECT_EQ(id.to_matrix(), IntegerMatrix::identity(4));
}

TEST(TwistProjection, EquivariantAtThree) {
  auto gbar = mod_p(gl2_conjugation(), 3);
  check_equivariant(twist_projection(gbar, 1));
  check_equivariant(twist_projection(mod_p(gl2_conjugation(), 2), 2));
}

// Gamma^m M as the symmetric tensors inside M^{(x)m}: e^[lambda] is the sum of the distinct
// words with content lambda, and its coaction is read off at the sorted words.
TEST(Functors, GammaMatchesSymmetricTensors) {
  auto gl2 = gl2_conjugation();
  const std::size_t n = gl2->rank();
  for (int m : {2, 3}) {
    ComodulePtr tm = gl2;
    for (int k = 1; k < m; ++k) tm = tensor(tm, gl2);
    ComodulePtr gm = div_power(gl2, m);
    auto word_index = [&](const std::vector<std::size_t>& w) {
      std::size_t idx = 0;
      for (std::size_t x : w) idx = idx * n + x;
      return idx;
    };
    auto content = [&](std::size_t idx) {
      Exponents e(n, 0);
      for (int k = 0; k < m; ++k, idx /= n) ++e[idx % n];
      return e;
    };
    for (std::size_t l = 0; l < gm->rank(); ++l) {
      std::vector<mpz_class> sym(tm->rank(), 0);
      for (std::size_t w = 0; w < tm->rank(); ++w)
        if (content(w) == gm->multisets()[l]) sym[w] = 1;
      std::vector<Polynomial> image = tm->coact(sym);
      for (std::size_t k = 0; k < gm->rank(); ++k) {
        std::vector<std::size_t> sorted;
        for (std::size_t i = 0; i < n; ++i)
          for (int c = 0; c < gm->multisets()[k][i]; ++c) sorted.push_back(i);
        EXPECT_EQ(gm->entry(k, l), image[word_index(sorted)]) << gm->labels()[k] << " " << gm->labels()[l];
      }
    }
  }
}

TEST(DivPowerMap, FunctorialOnComposition) {
  auto gl2 = gl2_conjugation();
  ComoduleMap id = identity_map(gl2);
  ComoduleMap g2 = div_power_map(id, 2);
  EXPECT_EQ(g2.to_matrix(), IntegerMatrix::identity(10));
}
