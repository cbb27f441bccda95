#include <gtest/gtest.h>

#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/errors.hpp"
#include "affinoid/groupoid/algebroid.hpp"
#include "affinoid/groupoid/pointwise.hpp"
#include "../support/generators.hpp"

namespace affinoid {
namespace {

using testing::Gen;

const CheckOptions kExact{};

Poly P(const char* text, std::size_t n) { return parse_poly(text, n); }
MultiVectorField vec(std::size_t n, std::initializer_list<const char*> comps) {
  MultiVectorField v(n, 1);
  std::size_t i = 0;
  for (const char* c : comps) v[Subset{1} << i++] = P(c, n);
  return v;
}

class CatalogGroupoid : public ::testing::TestWithParam<std::string> {
 protected:
  Groupoid g{catalog::lookup(GetParam())};
};

TEST_P(CatalogGroupoid, AxiomsHold) {
  const AxiomReport r = validate_axioms(g);
  for (const auto& v : r.violations) ADD_FAILURE() << v;
  EXPECT_TRUE(r.ok());
}

TEST_P(CatalogGroupoid, AlgebroidSatisfiesAnchorAndJacobi) {
  const LieAlgebroidData alg = lie_algebroid(g);
  EXPECT_TRUE(check_algebroid(alg, kExact).pass);
}

TEST_P(CatalogGroupoid, LeibnizRuleOfAlgebroidBracket) {
  const LieAlgebroidData alg = lie_algebroid(g);
  Gen gen(testing::base_seed() + 40);
  for (int i = 0; i < 5; ++i) {
    const auto u = testing::random_mv_section(gen, g, 1, 1);
    const auto v = testing::random_mv_section(gen, g, 1, 1);
    const Poly f = gen.poly(g.dim_M(), 2);
    const auto lhs = algebroid_bracket(alg, u, f * v);
    const auto rho_u_f = schouten_bracket(anchor_of(alg, u), MultiVectorField::function(g.dim_M(), f))[0];
    EXPECT_EQ(lhs, f * algebroid_bracket(alg, u, v) + rho_u_f * v);
  }
}

TEST_P(CatalogGroupoid, RightTranslationIsBracketMorphism) {
  // Cross-check of the frame-only algebroid bracket against the Schouten
  // bracket of right translations on the groupoid.
  const LieAlgebroidData alg = lie_algebroid(g);
  Gen gen(testing::base_seed() + 41);
  for (int i = 0; i < 3; ++i) {
    const std::size_t p = static_cast<std::size_t>(gen.integer(1, std::min<long>(2, g.rank())));
    const std::size_t q = static_cast<std::size_t>(gen.integer(0, std::min<long>(2, g.rank())));
    const auto a = testing::random_mv_section(gen, g, p, 1);
    const auto b = testing::random_mv_section(gen, g, q, 1);
    const auto bracket = schouten_bracket(translate_right(g, a), translate_right(g, b));
    EXPECT_EQ(restrict_project(g, bracket), algebroid_bracket(alg, a, b));
    EXPECT_EQ(bracket, translate_right(g, algebroid_bracket(alg, a, b)));
  }
}

TEST_P(CatalogGroupoid, RestrictProjectInvertsTranslations) {
  Gen gen(testing::base_seed() + 42);
  for (std::size_t p = 0; p <= std::min<std::size_t>(2, g.rank()); ++p) {
    for (std::size_t q = 0; q <= std::min<std::size_t>(1, g.dim_M()); ++q) {
      const auto f = testing::random_section(gen, g, p, q, 2);
      EXPECT_EQ(restrict_project(g, translate_right(g, f)), f) << "right p=" << p << " q=" << q;
      EXPECT_EQ(restrict_project(g, translate_left(g, f)), f) << "left p=" << p << " q=" << q;
    }
  }
}

TEST_P(CatalogGroupoid, LeftAndRightInvariantFieldsCommute) {
  const std::size_t r = g.rank(), m = g.dim_M();
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const auto ea = MultiVectorField::basis(r, Subset{1} << a, Poly::constant(m, 1));
      const auto eb = MultiVectorField::basis(r, Subset{1} << b, Poly::constant(m, 1));
      EXPECT_TRUE(schouten_bracket(translate_right(g, ea), translate_left(g, eb)).is_zero());
    }
  }
}

TEST_P(CatalogGroupoid, TranslationsAreInvariant) {
  Gen gen(testing::base_seed() + 43);
  const auto pi = testing::random_mv_section(gen, g, 1, 2);
  EXPECT_TRUE(right_invariant(g, translate_right(g, pi), kExact).pass);
  EXPECT_TRUE(left_invariant(g, translate_left(g, pi), kExact).pass);
}

TEST_P(CatalogGroupoid, CotangentGroupoidLaws) {
  Gen gen(testing::base_seed() + 44);
  RationalSampler sampler(5);
  const std::size_t n = g.dim_G();
  for (int i = 0; i < 4; ++i) {
    const Point q = sampler.point(g.dim_Q());
    const Point pp = g.triples().evaluate(q);
    const Point p1(pp.begin(), pp.begin() + g.dim_P()), p2(pp.begin() + g.dim_P(), pp.end());
    const Point a = g.first().evaluate(p1), b = g.second().evaluate(p1), c = g.second().evaluate(p2);
    auto composable_with = [&](const Point& at_h, const Point& target) {
      // A covector eta at h with t(eta) = target.
      const QMatrix rf = evaluate(g.right_frame(), at_h);
      const LinearSolution sol = linsolve(rf.transpose(), target);
      Point eta = *sol.particular;
      for (const auto& k : sol.kernel) {
        const Rational w = gen.rational();
        for (std::size_t j = 0; j < n; ++j) eta[j] += w * k[j];
      }
      return eta;
    };
    const Point xi = gen.point(n);
    const Point eta = composable_with(b, covector_source(g, a, xi));
    const Point zeta = composable_with(c, covector_source(g, b, eta));
    const Point ab = g.multiply(a, b), bc = g.multiply(b, c);
    const Point xi_eta = multiply_covectors(g, a, b, xi, eta);
    EXPECT_EQ(covector_source(g, ab, xi_eta), covector_source(g, b, eta));
    EXPECT_EQ(covector_target(g, ab, xi_eta), covector_target(g, a, xi));
    const Point lhs = multiply_covectors(g, ab, c, xi_eta, zeta);
    const Point rhs = multiply_covectors(g, a, bc, xi, multiply_covectors(g, b, c, eta, zeta));
    EXPECT_EQ(lhs, rhs);
    // Unit law: xi . 1_{s(xi)} = xi.
    const Point base = g.src().evaluate(a);
    const Point unit_at = g.unit().evaluate(base);
    EXPECT_EQ(multiply_covectors(g, a, unit_at, xi, unit_covector(g, base, covector_source(g, a, xi))), xi);
    // Defining identity (xi.eta)(X.Y) = xi(X) + eta(Y) on a tangent basis.
    for (const auto& [x, y] : composable_tangent_basis(g, g.pair_coordinates().evaluate([&] {
           Point ab_pair = a;
           ab_pair.insert(ab_pair.end(), b.begin(), b.end());
           return ab_pair;
         }()))) {
      const Point xy = multiply_vectors(g, a, b, x, y);
      Rational l = 0, r = 0;
      for (std::size_t j = 0; j < n; ++j) {
        l += xi_eta[j] * xy[j];
        r += xi[j] * x[j] + eta[j] * y[j];
      }
      EXPECT_EQ(l, r);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogGroupoid, ::testing::ValuesIn(catalog::groupoid_ids()));

TEST(Groupoid, CorruptedMultiplicationIsReported) {
  GroupoidData d = catalog::make_pair(2);
  std::vector<Poly> comps = d.mult.components();
  comps[0] += P("x1^2", 6);
  d.mult = PolyMap(6, comps);
  const AxiomReport r = validate_axioms(Groupoid(d));
  EXPECT_FALSE(r.ok());
  EXPECT_NE(std::find(r.violations.begin(), r.violations.end(), "associativity"), r.violations.end());
}

TEST(Groupoid, RejectsSingularSplittingAndNonlinearParametrization) {
  GroupoidData d = catalog::make_pair(1);
  d.splitting(0, 1) = P("x1", 1);
  EXPECT_THROW(Groupoid{d}, SplittingError);
  GroupoidData e = catalog::make_pair(1);
  std::vector<Poly> comps = e.comp_param.components();
  comps[0] = P("x1^2", 3);
  e.comp_param = PolyMap(3, comps);
  EXPECT_THROW(Groupoid{e}, StructureError);
}

TEST(Algebroid, PairAnchorIsIdentity) {
  const Groupoid g(catalog::make_pair(2));
  const LieAlgebroidData alg = lie_algebroid(g);
  EXPECT_EQ(alg.anchor, PMatrix::identity(2, Poly(2)));
  for (const auto& row : alg.structure)
    for (const auto& c : row) EXPECT_TRUE(c.is_zero());
}

TEST(Algebroid, AbelianIsTrivial) {
  const Groupoid g(catalog::make_abelian(3));
  const LieAlgebroidData alg = lie_algebroid(g);
  EXPECT_EQ(alg.anchor.rows(), 0u);
  for (const auto& row : alg.structure)
    for (const auto& c : row) EXPECT_TRUE(c.is_zero());
}

TEST(Algebroid, HeisenbergHasOneStructureConstant) {
  const Groupoid g(catalog::make_heisenberg());
  // Hand Jacobian of (a,b,c)(a',b',c') in the first factor at the identity.
  PMatrix expected = PMatrix::identity(3, Poly(3));
  expected(2, 0) = P("x2", 3);
  EXPECT_EQ(g.right_frame(), expected);
  const LieAlgebroidData alg = lie_algebroid(g);
  int nonzero = 0;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b)
      if (!alg.structure[a][b].is_zero()) ++nonzero;
  EXPECT_EQ(nonzero, 1);
  const auto e3 = MultiVectorField::basis(3, Subset{0b100}, Poly::constant(0, 1));
  EXPECT_EQ(alg.structure[0][1], -e3);
}

TEST(Translations, PairOfLine) {
  const Groupoid g(catalog::make_pair(1));
  const auto u = MultiVectorField::basis(1, Subset{1}, P("x1^2 + 1", 1));
  EXPECT_EQ(translate_right(g, u), vec(2, {"x1^2 + 1", "0"}));
  EXPECT_EQ(translate_left(g, u), vec(2, {"0", "-x2^2 - 1"}));
  // (f(x), g(y)) restricts to f - g.
  EXPECT_EQ(restrict_project(g, vec(2, {"x1^2", "3 * x2"})), MultiVectorField::basis(1, Subset{1}, P("x1^2 - 3 * x1", 1)));
}

TEST(Translations, FunctionsPullBack) {
  const Groupoid g(catalog::make_pair(2));
  const Poly f = P("x1 * x2 + 1", 2);
  const auto sec = MultiVectorField::function(2, f);
  EXPECT_EQ(translate_right(g, sec)[0], g.tgt().pull(f));
  EXPECT_EQ(translate_left(g, sec)[0], g.src().pull(f));
}

TEST(Translations, AbelianConstantBivector) {
  const Groupoid g(catalog::make_abelian(2));
  const auto pi = MultiVectorField::basis(2, Subset{0b11}, Poly::constant(0, Rational(3, 2)));
  EXPECT_EQ(translate_right(g, pi), MultiVectorField::basis(2, Subset{0b11}, Poly::constant(2, Rational(3, 2))));
}

TEST(Cotangent, PairExample) {
  const Groupoid g(catalog::make_pair(1));
  const Rational alpha(2), beta(-1, 3), gamma(5);
  const Point xi{alpha, beta}, eta{-beta, gamma};
  EXPECT_EQ(multiply_covectors(g, {1, 2}, {2, 7}, xi, eta), (Point{alpha, gamma}));
  EXPECT_THROW(multiply_covectors(g, {1, 2}, {3, 7}, xi, eta), ComposabilityError);
  EXPECT_THROW(multiply_covectors(g, {1, 2}, {2, 7}, xi, Point{beta, gamma}), ComposabilityError);
}

TEST(Cotangent, AbelianRequiresEqualCovectors) {
  const Groupoid g(catalog::make_abelian(2));
  const Point xi{1, Rational(1, 2)};
  EXPECT_EQ(multiply_covectors(g, {1, 1}, {2, 3}, xi, xi), xi);
  EXPECT_THROW(multiply_covectors(g, {1, 1}, {2, 3}, xi, Point{1, 1}), ComposabilityError);
}

TEST(Oracle, Examples) {
  const Groupoid pair(catalog::make_pair(1));
  CheckOptions opts{CheckMode::sampled, 11, 25};
  EXPECT_TRUE(coisotropy_oracle(pair, vec(2, {"2", "2"}), OracleShape::triangles, opts).pass);
  const Groupoid line(catalog::make_abelian(1));
  EXPECT_TRUE(coisotropy_oracle(line, vec(1, {"x1"}), OracleShape::triangles, opts).pass);
  const Verdict v = coisotropy_oracle(line, vec(1, {"x1^2"}), OracleShape::parallelograms, opts);
  EXPECT_FALSE(v.pass);
  EXPECT_FALSE(v.witness.empty());
}

}  // namespace
}  // namespace affinoid
