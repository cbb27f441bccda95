#include <gtest/gtest.h>

#include "affinoid/affine/tensors.hpp"
#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/errors.hpp"
#include "../support/generators.hpp"

namespace affinoid {
namespace {

using testing::Gen;
using testing::random_affine;
using testing::random_section;

Poly P(const char* text, std::size_t n) { return parse_poly(text, n); }

PMatrix right_matrix(const Groupoid& g, const AlgebroidSection& n) { return translate_right(g, n).to_matrix(); }
PMatrix left_matrix(const Groupoid& g, const AlgebroidSection& n) { return translate_left(g, n).to_matrix(); }

PMatrix scalar(const Groupoid& g, const Rational& c) {
  return PMatrix::identity(g.dim_G(), Poly(g.dim_G())) * Poly::constant(g.dim_G(), c);
}

/// c I + ->n1 + <-n2.
PMatrix random_affine11(Gen& gen, const Groupoid& g) {
  return scalar(g, gen.rational()) + right_matrix(g, random_section(gen, g, 1, 1, 1)) +
         left_matrix(g, random_section(gen, g, 1, 1, 1));
}

/// Adds x1 * x_n to the first coefficient.
template <Variance V>
AlternatingField<V> perturb(AlternatingField<V> w) {
  const std::size_t n = w.num_vars();
  w[w.index_sets().front()] += Poly::variable(n, 0) * Poly::variable(n, n - 1);
  return w;
}

class CatalogTensors : public ::testing::TestWithParam<std::string> {
 protected:
  Groupoid g{catalog::lookup(GetParam())};
};

TEST_P(CatalogTensors, AffineFunctions) {
  Gen gen(testing::base_seed() + 90);
  const Poly f = gen.poly(g.dim_M(), 2, 3) + Poly::constant(g.dim_M(), 1);
  const Poly sf = g.src().pull(f), tf = g.tgt().pull(f);
  EXPECT_TRUE(is_affine_function(g, sf));
  EXPECT_TRUE(is_affine_function(g, tf));
  EXPECT_FALSE(is_multiplicative_function(g, sf));
  EXPECT_TRUE(is_multiplicative_function(g, sf - tf));
  // F is affine iff F - t^* i^* F is multiplicative.
  const Poly big = gen.poly(g.dim_G(), 2, 3);
  const Poly restricted = g.unit().pull(big);
  EXPECT_EQ(is_affine_function(g, big), is_multiplicative_function(g, big - g.tgt().pull(restricted)));
}

TEST_P(CatalogTensors, GammaUnitsAndProducts) {
  Gen gen(testing::base_seed() + 91);
  const std::size_t n = g.dim_G();
  for (int trial = 0; trial < 5; ++trial) {
    const Point at = gen.point(n);
    const GammaPoint gamma{at, {gen.point(n), gen.point(n)}, {gen.point(n)}};
    const GammaPoint unit = gamma_source_unit(g, gamma);
    const GammaPoint back = gamma_multiply(g, gamma, unit);
    EXPECT_EQ(back.base, gamma.base);
    EXPECT_EQ(back.vectors, gamma.vectors);
    EXPECT_EQ(back.covectors, gamma.covectors);
  }
}

TEST_P(CatalogTensors, EvaluationOnGamma) {
  Gen gen(testing::base_seed() + 92);
  const std::size_t n = g.dim_G();
  const PMatrix big_n = random_affine11(gen, g) + scalar(g, 1);
  const Point at = gen.point(n), x = gen.point(n), xi = gen.point(n);
  const QMatrix nv = evaluate(big_n, at);
  Rational expected = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) expected += xi[i] * nv(i, j) * x[j];
  EXPECT_EQ(tensor_eval_on_Gamma(g, TensorField::from_matrix(big_n), {at, {x}, {xi}}), expected);

  if (n >= 2) {
    const MultiVectorField pi = testing::random_mv(gen, n, 2, 2);
    const TensorField t = TensorField::from_multivector(pi);
    const Point a = gen.point(n), b = gen.point(n);
    EXPECT_EQ(tensor_eval_on_Gamma(g, t, {at, {}, {a, b}}), -tensor_eval_on_Gamma(g, t, {at, {}, {b, a}}));
    const DifferentialForm w = testing::random_form(gen, n, 2, 2);
    EXPECT_EQ(tensor_eval_on_Gamma(g, TensorField::from_form(w), {at, {a, b}, {}}), evaluate(w, at, {a, b}));
  }
  EXPECT_THROW(tensor_eval_on_Gamma(g, TensorField::from_matrix(big_n), {at, {x, x}, {xi}}), ArityError);
  EXPECT_THROW(tensor_eval_on_Gamma(g, TensorField::from_matrix(big_n), {Point(n + 1), {x}, {xi}}), ArityError);
}

TEST_P(CatalogTensors, AgreesWithVectorFieldsAndForms) {
  Gen gen(testing::base_seed() + 93);
  const std::size_t n = g.dim_G();
  for (std::size_t k = 1; k <= std::min<std::size_t>(2, g.rank()); ++k) {
    const MultiVectorField pi = random_affine(gen, g, k);
    for (const auto& field : {pi, perturb(pi)}) {
      EXPECT_EQ(is_affine_tensor(g, TensorField::from_multivector(field)), is_affine_mv(g, field));
    }
    EXPECT_TRUE(is_affine_tensor(g, TensorField::from_multivector(pi)));
  }
  for (std::size_t k = 1; k <= std::min<std::size_t>(2, n); ++k) {
    std::vector<DifferentialForm> forms;
    if (k <= g.dim_M()) forms.push_back(pullback(g.src(), testing::random_form(gen, g.dim_M(), k, 2)));
    for (const auto& b : form_space(g, k, 1, FormClass::affine)) forms.push_back(b);
    forms.push_back(perturb(testing::random_form(gen, n, k, 1)));
    for (const auto& w : forms) {
      EXPECT_EQ(is_affine_tensor(g, TensorField::from_form(w)), is_affine_form(g, w));
      EXPECT_EQ(is_multiplicative_tensor(g, TensorField::from_form(w)), is_multiplicative_form(g, w));
    }
  }
}

TEST_P(CatalogTensors, TranslationsAndTheChainMap) {
  Gen gen(testing::base_seed() + 94);
  for (std::size_t p = 0; p <= std::min<std::size_t>(1, g.rank()); ++p)
    for (std::size_t q = 0; q <= std::min<std::size_t>(1, g.dim_M()); ++q) {
      if (p + q == 0) continue;
      const AlgebroidSection f = random_section(gen, g, p, q, 1);
      EXPECT_TRUE(is_affine_tensor(g, translate_right(g, f)));
      EXPECT_TRUE(is_affine_tensor(g, translate_left(g, f)));
      EXPECT_TRUE(is_multiplicative_tensor(g, chain_map(g, f)));
      const AffineTensor t(g, translate_right(g, f));
      EXPECT_EQ(t.core(), f);
      EXPECT_TRUE(t.source().is_zero());
      EXPECT_EQ(t.target(), chain_map(g, f));
    }
}

TEST_P(CatalogTensors, FleftOnDecomposableSections) {
  Gen gen(testing::base_seed() + 95);
  for (std::size_t q = 0; q <= std::min<std::size_t>(2, g.dim_M()); ++q) {
    const MultiVectorField u = testing::random_mv_section(gen, g, 1, 1);
    DifferentialForm beta(g.dim_M(), g.dim_M(), q);
    for (const Subset s : beta.index_sets()) beta[s] = gen.poly(g.dim_M(), 1, 2);
    const Verdict v = fleft_check(g, u, beta);
    EXPECT_TRUE(v.pass) << v.detail;
  }
}

TEST_P(CatalogTensors, TwoVectorSpaceLaws) {
  Gen gen(testing::base_seed() + 96);
  const std::vector<std::pair<std::size_t, std::size_t>> shapes{{1, 1}, {0, 2}};
  for (const auto& [p, q] : shapes) {
    if (q > g.dim_G()) continue;
    auto section = [&] { return random_section(gen, g, p, q, 1); };
    const TensorField lambda = chain_map(g, section());
    const AffineTensor a(g, lambda + translate_right(g, section()) + translate_left(g, section()));
    const AffineTensor b = AffineTensor::trusted(g, a.source() + translate_left(g, section()));
    const AffineTensor c = AffineTensor::trusted(g, b.source() + translate_left(g, section()));
    EXPECT_TRUE(is_affine_tensor(g, b.field()));

    const AffineTensor ab = tensor_compose(a, b);
    EXPECT_EQ(ab.source(), b.source());
    EXPECT_EQ(ab.target(), a.target());
    EXPECT_EQ(tensor_compose(ab, c).field(), tensor_compose(a, tensor_compose(b, c)).field());

    const AffineTensor left_unit = tensor_unit(g, a.target());
    const AffineTensor right_unit = tensor_unit(g, a.source());
    EXPECT_EQ(tensor_compose(left_unit, a).field(), a.field());
    EXPECT_EQ(tensor_compose(a, right_unit).field(), a.field());

    const AffineTensor inv = tensor_inverse(a);
    EXPECT_EQ(inv.source(), a.target());
    EXPECT_EQ(inv.target(), a.source());
    EXPECT_EQ(tensor_compose(a, inv).field(), a.target());
    EXPECT_EQ(tensor_compose(inv, a).field(), a.source());

    const Rational r = gen.nonzero_rational();
    const AffineTensor combo = a + r * b;
    EXPECT_EQ(combo.source(), a.source() + r * b.source());
    EXPECT_EQ(combo.target(), a.target() + r * b.target());
    if (a.source() != b.source()) EXPECT_THROW(tensor_compose(a, c), ComposabilityError);
  }
}

TEST_P(CatalogTensors, CompositionOfAffine11) {
  Gen gen(testing::base_seed() + 97);
  for (int trial = 0; trial < 2; ++trial) {
    const Affine11 a(g, random_affine11(gen, g));
    const Affine11 b(g, random_affine11(gen, g));
    EXPECT_TRUE(a.blocks().upper_right.is_zero());
    const Verdict v = hor1_check(a, b);
    EXPECT_TRUE(v.pass) << v.detail;
    EXPECT_EQ(t11_compose(a, Affine11::identity(g)).matrix(), a.matrix());
  }
}

TEST_P(CatalogTensors, MonoidalInterchange) {
  Gen gen(testing::base_seed() + 98);
  const Affine11 n1(g, random_affine11(gen, g));
  const Affine11 n2(g, random_affine11(gen, g));
  const Affine11 n3 = Affine11::trusted(g, n1.source() + left_matrix(g, random_section(gen, g, 1, 1, 1)));
  const Affine11 n4 = Affine11::trusted(g, n2.source() + left_matrix(g, random_section(gen, g, 1, 1, 1)));
  const Verdict v = monoidal_interchange_check(n1, n2, n3, n4);
  EXPECT_TRUE(v.pass) << v.detail;
  if (g.dim_M() > 0) EXPECT_THROW(monoidal_interchange_check(n1, n2, n2, n4), ComposabilityError);
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogTensors, ::testing::ValuesIn(catalog::groupoid_ids()));

// ---- worked examples -------------------------------------------------------------

TEST(AffineFunction, ProductOfCoordinatesOnPairOfLine) {
  const Groupoid g(catalog::make_pair(1));
  EXPECT_FALSE(is_affine_function(g, P("x1 * x2", 2)));
  EXPECT_TRUE(is_affine_function(g, P("x1^2 + 3 * x2", 2)));
}

/// (N, N') on Pair(R): ->N + <-N' as a 2x2 matrix in (x, y).
PMatrix pair_normal_form(const Groupoid& g, const char* n, const char* n_prime) {
  PMatrix a(1, 1, Poly(1)), b(1, 1, Poly(1));
  a(0, 0) = P(n, 1);
  b(0, 0) = P(n_prime, 1);
  return right_matrix(g, section_from_matrix(g, a)) + left_matrix(g, section_from_matrix(g, b));
}

TEST(PairOneOne, NormalFormIsDiagonalWithSignedSecondFactor) {
  const Groupoid g(catalog::make_pair(1));
  const PMatrix m = pair_normal_form(g, "x1 + 1", "2 * x1");
  PMatrix expected(2, 2, Poly(2));
  expected(0, 0) = P("x1 + 1", 2);
  expected(1, 1) = P("-2 * x2", 2);
  EXPECT_EQ(m, expected);
  EXPECT_TRUE(is_affine_tensor(g, TensorField::from_matrix(m)));
  // (N, -N) acts as (N(X), N(Y)) and is multiplicative.
  const PMatrix diag = pair_normal_form(g, "x1^2", "-x1^2");
  EXPECT_EQ(diag(1, 1), P("x2^2", 2));
  EXPECT_TRUE(is_multiplicative_tensor(g, TensorField::from_matrix(diag)));
  EXPECT_FALSE(is_multiplicative_tensor(g, TensorField::from_matrix(m)));
}

TEST(PairOneOne, CompositionAndMultiplication) {
  const Groupoid g(catalog::make_pair(1));
  const Affine11 n1(g, pair_normal_form(g, "x1", "3"));
  const Affine11 n2(g, pair_normal_form(g, "2", "x1 + 1"));
  // (N1, N2) o (N3, N4) = (N1 N3, -N2 N4).
  const Affine11 a(g, pair_normal_form(g, "x1", "1"));
  const Affine11 b(g, pair_normal_form(g, "2", "x1"));
  EXPECT_EQ(t11_compose(a, b).matrix(), pair_normal_form(g, "2 * x1", "-x1"));
  // Multiplicable iff N2 = -N3, with product (N1, N4).
  const Affine11 c(g, pair_normal_form(g, "-3", "x1^2"));
  EXPECT_EQ(t11_multiply(n1, c).matrix(), pair_normal_form(g, "x1", "x1^2"));
  EXPECT_THROW(t11_multiply(n1, n2), ComposabilityError);
  const Affine11 d(g, pair_normal_form(g, "-x1 - 1", "5"));
  const Affine11 e(g, pair_normal_form(g, "-5", "x1"));
  const Verdict v = monoidal_interchange_check(n1, n2, c, d);
  EXPECT_TRUE(v.pass) << v.detail;
  EXPECT_TRUE(monoidal_interchange_check(a, d, Affine11(g, pair_normal_form(g, "-1", "0")), e).pass);
}

TEST(PairOneOne, RejectsMatricesNotOfNormalForm) {
  const Groupoid g(catalog::make_pair(1));
  PMatrix m(2, 2, Poly(2));
  m(0, 0) = P("x2", 2);
  EXPECT_FALSE(is_affine_tensor(g, TensorField::from_matrix(m)));
  EXPECT_THROW(Affine11(g, m), StructureError);
  PMatrix off(2, 2, Poly(2));
  off(0, 1) = Poly::constant(2, 1);
  EXPECT_FALSE(is_affine_tensor(g, TensorField::from_matrix(off)));
}

MultiVectorField bivector(const Groupoid& g, const char* coeff) {
  MultiVectorField s = make_mv_section(g, 2);
  s[0b11] = P(coeff, g.dim_M());
  return s;
}

DifferentialForm base_two_form(const Groupoid& g, const char* coeff) {
  DifferentialForm w(g.dim_M(), g.dim_M(), 2);
  w[0b11] = P(coeff, g.dim_M());
  return w;
}

TEST(PiTheta, AffineBivectorAndTwoFormOnPairOfPlane) {
  const Groupoid g(catalog::make_pair(2));
  const AffineMV p(g, translate_right(g, bivector(g, "x1 + x2^2")) + translate_left(g, bivector(g, "3 * x1 * x2")));
  // pr1^* alpha + pr2^* beta with pr1 = t and pr2 = s.
  const AffineForm t(g, pullback(g.tgt(), base_two_form(g, "x2 + 1")) + pullback(g.src(), base_two_form(g, "x1^2")));
  const PiThetaReport rep = pi_compose_theta(p, t);
  EXPECT_TRUE(rep.component.pass) << rep.component.detail;
  EXPECT_TRUE(rep.translations.pass) << rep.translations.detail;
  EXPECT_TRUE(rep.affine.pass) << rep.affine.detail;
  EXPECT_FALSE(rep.product.blocks().n.is_zero());
}

TEST(PiTheta, DegenerateCases) {
  const Groupoid g(catalog::make_pair(2));
  const MultiVectorField pi = bivector(g, "x1 - 2");
  const AffineMV mult(g, translate_right(g, pi) - translate_left(g, pi));
  const DifferentialForm alpha = base_two_form(g, "x2");
  const AffineForm mult_form(g, pullback(g.tgt(), alpha) - pullback(g.src(), alpha));
  const PiThetaReport rep = pi_compose_theta(mult, mult_form);
  EXPECT_TRUE(rep.product.blocks().n.is_zero());
  EXPECT_TRUE(is_multiplicative_tensor(g, rep.product.tensor().field()));
  EXPECT_TRUE(rep.component.pass && rep.translations.pass && rep.affine.pass);

  const AffineForm zero(g, DifferentialForm(4, 4, 2));
  EXPECT_TRUE(pi_compose_theta(mult, zero).product.matrix().is_zero());
  Gen gen(testing::base_seed() + 99);
  const AffineMV vector_field(g, translate_right(g, testing::random_mv_section(gen, g, 1, 1)));
  EXPECT_THROW(pi_compose_theta(vector_field, zero), DegreeError);
}

TEST(GroupCases, HeisenbergAffineIffAdEquivariant) {
  const Groupoid h(catalog::make_heisenberg());
  QMatrix swap(3, 3, Rational(0));
  swap(0, 2) = swap(2, 0) = swap(1, 1) = 1;
  EXPECT_FALSE(ad_equivariant(h, to_poly_matrix(swap, 3)));
  EXPECT_TRUE(ad_equivariant(h, PMatrix::identity(3, Poly(3))));
  const GroupCasesReport rep = group_cases_check(catalog::make_heisenberg(), 0);
  EXPECT_TRUE(rep.verdict.pass) << rep.verdict.detail;
  std::size_t equivariant = 0;
  for (const auto& c : rep.cases) {
    if (c.expect_affine) ++equivariant;
    if (c.label == "identity") EXPECT_TRUE(c.affine);
    if (c.label == "swap e1 and e3") EXPECT_FALSE(c.affine);
  }
  // identity, zero, E31 and E32.
  EXPECT_EQ(equivariant, 4u);
}

TEST(GroupCases, PairTimesHeisenberg) {
  const GroupCasesReport rep = group_cases_check(catalog::make_heisenberg(), 1);
  EXPECT_TRUE(rep.verdict.pass) << rep.verdict.detail;
  ASSERT_EQ(rep.cases.size(), 4u);
  EXPECT_TRUE(rep.cases[1].affine);
  EXPECT_FALSE(rep.cases[1].multiplicative);
}

TEST(GroupCases, AbelianGroupHasOnlyEquivariantMaps) {
  const GroupCasesReport rep = group_cases_check(catalog::make_abelian(2), 0);
  EXPECT_TRUE(rep.verdict.pass) << rep.verdict.detail;
  for (const auto& c : rep.cases) EXPECT_TRUE(c.affine) << c.label;
  EXPECT_THROW(group_cases_check(catalog::make_pair(1), 0), StructureError);
}

}  // namespace
}  // namespace affinoid
