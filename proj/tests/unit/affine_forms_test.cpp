#include <gtest/gtest.h>

#include "affinoid/affine/forms.hpp"
#include "affinoid/catalog/groupoids.hpp"
#include "affinoid/errors.hpp"
#include "../support/generators.hpp"

namespace affinoid {
namespace {

using testing::Gen;

Poly P(const char* text, std::size_t n) { return parse_poly(text, n); }

DifferentialForm form(std::size_t n, std::size_t k, std::initializer_list<std::pair<Subset, const char*>> comps) {
  DifferentialForm w(n, n, k);
  for (const auto& [s, c] : comps) w[s] = P(c, n);
  return w;
}

DifferentialForm random_base_form(Gen& gen, const Groupoid& g, std::size_t k) {
  const std::size_t m = g.dim_M();
  DifferentialForm w(m, m, k);
  for (const Subset s : w.index_sets()) w[s] = gen.poly(m, 2, 2);
  return w;
}

DifferentialForm random_form(Gen& gen, std::size_t n, std::size_t k) {
  DifferentialForm w(n, n, k);
  for (const Subset s : w.index_sets()) w[s] = gen.poly(n, 2, 2);
  return w;
}

/// Adds x1 * x_n to the first coefficient.
DifferentialForm perturb(DifferentialForm w) {
  const std::size_t n = w.num_vars();
  w[w.index_sets().front()] += Poly::variable(n, 0) * Poly::variable(n, n - 1);
  return w;
}

class CatalogForms : public ::testing::TestWithParam<std::string> {
 protected:
  Groupoid g{catalog::lookup(GetParam())};
  std::size_t max_degree() const { return std::min<std::size_t>(2, g.dim_G()); }

  /// A battery of affine k-forms: s^*theta, t^*theta and a random element of
  /// the computed solution space.
  std::vector<DifferentialForm> battery(Gen& gen, std::size_t k) const {
    std::vector<DifferentialForm> out;
    if (k <= g.dim_M()) {
      out.push_back(pullback(g.src(), random_base_form(gen, g, k)));
      out.push_back(pullback(g.tgt(), random_base_form(gen, g, k)));
    }
    const auto space = form_space(g, k, 1, FormClass::affine);
    if (!space.empty()) {
      DifferentialForm w(g.dim_G(), g.dim_G(), k);
      for (const auto& b : space) w += gen.rational() * b;
      out.push_back(w);
    }
    return out;
  }
};

TEST_P(CatalogForms, PullbacksFromTheBase) {
  Gen gen(testing::base_seed() + 70);
  for (std::size_t k = 0; k <= std::min<std::size_t>(2, g.dim_M()); ++k) {
    const DifferentialForm theta = random_base_form(gen, g, k);
    const DifferentialForm ss = pullback(g.src(), theta), tt = pullback(g.tgt(), theta);
    EXPECT_TRUE(is_affine_form(g, ss));
    EXPECT_TRUE(is_affine_form(g, tt));
    EXPECT_TRUE(is_multiplicative_form(g, ss - tt));
    const AffineForm f(g, ss);
    EXPECT_EQ(f.theta(), theta);
    EXPECT_TRUE(f.target().is_zero());
    EXPECT_EQ(f.source(), ss - tt);
  }
}

TEST_P(CatalogForms, IsotropyOfParallelogramsMatchesAffinity) {
  Gen gen(testing::base_seed() + 71);
  for (std::size_t k = 0; k <= max_degree(); ++k) {
    for (const auto& w : battery(gen, k)) {
      EXPECT_TRUE(parallelogram_isotropy(g, w).pass);
      EXPECT_TRUE(affine_form_identity_target(g, w).pass);
      const DifferentialForm bad = perturb(w);
      EXPECT_FALSE(is_affine_form(g, bad));
      EXPECT_FALSE(parallelogram_isotropy(g, bad).pass);
    }
    for (int i = 0; i < 3; ++i) {
      const DifferentialForm w = random_form(gen, g.dim_G(), k);
      EXPECT_EQ(is_affine_form(g, w), parallelogram_isotropy(g, w).pass);
    }
  }
}

TEST_P(CatalogForms, LeftRightCriterion) {
  Gen gen(testing::base_seed() + 72);
  for (std::size_t k = 0; k <= max_degree(); ++k) {
    for (const auto& w : battery(gen, k)) {
      const AffineForm f(g, w);
      EXPECT_TRUE(is_multiplicative_form(g, f.source()));
      EXPECT_TRUE(is_multiplicative_form(g, f.target()));
      const AffineForm bad = AffineForm::trusted(g, perturb(w));
      EXPECT_FALSE(is_multiplicative_form(g, bad.source()));
      EXPECT_FALSE(is_multiplicative_form(g, bad.target()));
      EXPECT_THROW(AffineForm(g, bad.field()), StructureError);
    }
  }
}

TEST_P(CatalogForms, TwoVectorSpaceLaws) {
  Gen gen(testing::base_seed() + 73);
  for (std::size_t k = 0; k <= max_degree(); ++k) {
    const auto forms = battery(gen, k);
    if (forms.empty()) continue;
    const AffineForm a(g, forms.back());
    auto next = [&](const AffineForm& x) {
      // t(Theta_r + s^* lambda) = Theta_r, whatever lambda is.
      DifferentialForm lambda(g.dim_M(), g.dim_M(), k);
      if (k <= g.dim_M()) lambda = random_base_form(gen, g, k);
      return AffineForm::trusted(g, x.source() + pullback(g.src(), lambda));
    };
    const AffineForm b = next(a), c = next(b);
    EXPECT_EQ(b.target(), a.source());
    const AffineForm ab = form_compose(a, b);
    EXPECT_EQ(ab.source(), b.source());
    EXPECT_EQ(ab.target(), a.target());
    EXPECT_TRUE(is_affine_form(g, ab.field()));
    EXPECT_EQ(form_compose(ab, c).field(), form_compose(a, form_compose(b, c)).field());
    EXPECT_EQ(form_compose(form_unit(g, a.target()), a).field(), a.field());
    EXPECT_EQ(form_compose(a, form_unit(g, a.source())).field(), a.field());
    const AffineForm inv = form_inverse(a);
    EXPECT_EQ(form_compose(a, inv).field(), a.target());
    EXPECT_EQ(form_compose(inv, a).field(), a.source());
    EXPECT_EQ(form_inverse(inv).field(), a.field());
    // Linearity of composition.
    const AffineForm a2(g, forms.front());
    const AffineForm b2 = next(a2);
    EXPECT_EQ(form_compose(a + a2, b + b2).field(), (form_compose(a, b) + form_compose(a2, b2)).field());
  }
}

TEST_P(CatalogForms, CochainIsomorphism) {
  Gen gen(testing::base_seed() + 74);
  for (std::size_t k = 0; k <= max_degree(); ++k) {
    const Verdict v = cochain_iso_check(g, battery(gen, k));
    EXPECT_TRUE(v.pass) << v.detail;
  }
}

TEST_P(CatalogForms, InfinitesimalData) {
  Gen gen(testing::base_seed() + 75);
  for (std::size_t k = 1; k <= max_degree(); ++k) {
    for (const auto& w : battery(gen, k)) {
      const AffineForm f(g, w);
      IMExtraction ex = im_form_extract(f);
      EXPECT_TRUE(check_im_form(ex.im).pass);
      // Theta is recovered from its multiplicative part and theta.
      EXPECT_EQ(phi_inverse(g, {f.source(), ex.theta}), w);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(All, CatalogForms, ::testing::ValuesIn(catalog::groupoid_ids()));

TEST(AffineForms, AbelianMultiplicativeOneFormsAreConstant) {
  const Groupoid g(catalog::make_abelian(2));
  const auto space = form_space(g, 1, 2, FormClass::multiplicative);
  ASSERT_EQ(space.size(), 2u);
  for (const auto& w : space)
    for (const Subset s : w.index_sets()) EXPECT_TRUE(w[s].is_constant());
  EXPECT_TRUE(is_multiplicative_form(g, form(2, 1, {{0b01, "3"}, {0b10, "-1/2"}})));
  EXPECT_FALSE(is_affine_form(g, form(2, 1, {{0b01, "x1"}})));
}

TEST(AffineForms, HeisenbergHasNoAffineFormsAboveDegreeOne) {
  const Groupoid g(catalog::make_heisenberg());
  EXPECT_TRUE(form_space(g, 2, 2, FormClass::affine).empty());
  EXPECT_TRUE(form_space(g, 3, 2, FormClass::affine).empty());
  const auto ones = form_space(g, 1, 2, FormClass::affine);
  EXPECT_EQ(ones.size(), 2u);
  for (const auto& w : ones) EXPECT_TRUE(is_multiplicative_form(g, w));
}

TEST(AffineForms, PairGroupoidForms) {
  const Groupoid g(catalog::make_pair(2));
  // pr1^* alpha + pr2^* beta with alpha = x1 x2 dx1 + dx2, beta = x2^2 dx1.
  const auto theta = form(4, 1, {{0b0001, "x1 * x2"}, {0b0010, "1"}, {0b0100, "x4^2"}});
  const AffineForm f(g, theta);
  EXPECT_EQ(f.theta(), DifferentialForm(2, 2, 1) + [] {
    DifferentialForm w(2, 2, 1);
    w[0b01] = P("x1 * x2 + x2^2", 2);
    w[0b10] = P("1", 2);
    return w;
  }());
  // Theta_l = pr1^* alpha - pr2^* alpha, Theta_r = pr2^* beta - pr1^* beta.
  EXPECT_EQ(f.target(), form(4, 1, {{0b0001, "x1 * x2"}, {0b0010, "1"}, {0b0100, "-x3 * x4"}, {0b1000, "-1"}}));
  EXPECT_EQ(f.source(), form(4, 1, {{0b0001, "-x2^2"}, {0b0100, "x4^2"}}));
  EXPECT_TRUE(parallelogram_isotropy(g, theta).pass);
  // Mixed coefficients are not affine.
  EXPECT_FALSE(is_affine_form(g, form(4, 1, {{0b0001, "x3"}})));
  // Affine forms of coefficient degree <= 1 split as pr1^* alpha + pr2^* beta:
  // 2 * (2 + 2 * 2) = 12 dimensions for k = 1.
  EXPECT_EQ(form_space(g, 1, 1, FormClass::affine).size(), 12u);
  EXPECT_EQ(form_space(g, 1, 1, FormClass::multiplicative).size(), 6u);
}

TEST(AffineForms, PairOfLineRejectsTwoForms) {
  const Groupoid g(catalog::make_pair(1));
  const auto w = form(2, 2, {{0b11, "x1^2 - 2 * x1 * x2 + x2^2"}});
  EXPECT_FALSE(is_affine_form(g, w));
  EXPECT_FALSE(parallelogram_isotropy(g, w).pass);
  EXPECT_TRUE(form_space(g, 2, 2, FormClass::affine).empty());
}

TEST(AffineForms, IMFormOfPairOfLine) {
  const Groupoid g(catalog::make_pair(1));
  // Theta = s^* theta - t^* theta with theta = (x^2 + 1) dx.
  DifferentialForm theta(1, 1, 1);
  theta[0b1] = P("x1^2 + 1", 1);
  const DifferentialForm big = pullback(g.src(), theta) - pullback(g.tgt(), theta);
  const IMExtraction ex = im_form_extract(AffineForm(g, big));
  EXPECT_TRUE(ex.theta.is_zero());
  ASSERT_EQ(ex.im.mu.size(), 1u);
  EXPECT_EQ(ex.im.mu[0], DifferentialForm::function(1, P("-x1^2 - 1", 1)));
  // Closed multiplicative forms have nu = 0.
  EXPECT_TRUE(ex.im.nu[0].is_zero());
}

TEST(AffineForms, IMEquationsRejectArbitraryData) {
  const Groupoid g(catalog::make_pair(2));
  IMForm im;
  im.algebroid = lie_algebroid(g);
  im.degree = 1;
  im.mu = {DifferentialForm::function(2, P("x2", 2)), DifferentialForm::function(2, P("0", 2))};
  im.nu = {DifferentialForm(2, 2, 1), DifferentialForm(2, 2, 1)};
  EXPECT_FALSE(check_im_form(im).pass);
  // Extracted data passes; a perturbed nu does not.
  DifferentialForm theta(2, 2, 1);
  theta[0b01] = P("x1 * x2", 2);
  IMExtraction ex = im_form_extract(AffineForm(g, pullback(g.src(), theta) - pullback(g.tgt(), theta)));
  EXPECT_TRUE(check_im_form(ex.im).pass);
  EXPECT_FALSE(ex.im.nu[0].is_zero());
  ex.im.nu[0][0b10] += P("1", 2);
  EXPECT_FALSE(check_im_form(ex.im).pass);
}

}  // namespace
}  // namespace affinoid
