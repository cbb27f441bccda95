#include <gtest/gtest.h>

#include <map>

#include "affinoid/errors.hpp"
#include "affinoid/exact/linsolve.hpp"
#include "affinoid/exact/poly_map.hpp"
#include "affinoid/exact/sampling.hpp"
#include "../support/generators.hpp"

namespace affinoid {
namespace {

using testing::Gen;

Poly P(const char* text, std::size_t n) { return parse_poly(text, n); }

// Oracle: multiply via integer coefficients held in an exponent-vector map.
// Scales both inputs by the lcm of their denominators so only mpz products
// are involved, then divides back.
Poly integer_scaled_product(const Poly& a, const Poly& b) {
  auto scale = [](const Poly& p) {
    mpz_class l = 1;
    for (const auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.get_den_mpz_t());
    return l;
  };
  const mpz_class la = scale(a), lb = scale(b);
  const std::size_t n = a.num_vars();
  std::map<std::vector<unsigned>, mpz_class> acc;
  for (const auto& s : a.terms()) {
    const mpz_class cs = s.coeff.get_num() * (la / s.coeff.get_den());
    for (const auto& t : b.terms()) {
      const mpz_class ct = t.coeff.get_num() * (lb / t.coeff.get_den());
      std::vector<unsigned> e(n);
      for (std::size_t i = 0; i < n; ++i) e[i] = s.monomial[i] + t.monomial[i];
      acc[e] += cs * ct;
    }
  }
  std::vector<Poly::Term> terms;
  for (const auto& [e, c] : acc) {
    Monomial m;
    for (std::size_t i = 0; i < n; ++i) m.set(i, e[i]);
    Rational q(c, la * lb);
    q.canonicalize();
    terms.push_back({m, q});
  }
  return Poly(n, terms);
}

TEST(Rational, ParsesAndPrintsCanonically) {
  EXPECT_EQ(to_string(parse_rational("4/6")), "2/3");
  EXPECT_EQ(to_string(parse_rational(" -3 ")), "-3");
  EXPECT_EQ(to_string(parse_rational("0/5")), "0");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("1/-2"), ParseError);
  EXPECT_THROW(parse_rational("1.5"), ParseError);
}

TEST(Rational, ArithmeticIsExact) {
  Gen g(testing::base_seed());
  for (int i = 0; i < 200; ++i) {
    const Rational a = g.rational(), b = g.nonzero_rational();
    EXPECT_EQ(Rational((a + b) - b), a);
    EXPECT_EQ(Rational((a * b) / b), a);
  }
}

TEST(Poly, DifferenceOfSquares) {
  EXPECT_EQ(P("x1 + 1", 1) * P("x1 - 1", 1), P("x1^2 - 1", 1));
}

TEST(Poly, AdditiveIdentity) {
  const Poly p = P("3 * x1 * x2 + 1/2", 2);
  EXPECT_EQ(p + Poly(2), p);
}

TEST(Poly, HalfTimesTwoThirds) {
  const Poly prod = P("1/2 * x1", 2) * P("2/3 * x2", 2);
  EXPECT_EQ(prod, P("1/3 * x1 * x2", 2));
  EXPECT_EQ(prod, integer_scaled_product(P("1/2 * x1", 2), P("2/3 * x2", 2)));
}

TEST(Poly, ArityMismatchThrows) {
  EXPECT_THROW(P("x1", 1) + P("x1", 2), ArityError);
  EXPECT_THROW(P("x1", 1) * P("x1", 2), ArityError);
  EXPECT_THROW(P("x3", 2), ParseError);
}

TEST(Poly, MultiplicationMatchesIntegerScaledOracle) {
  Gen g(testing::base_seed() + 1);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const Poly a = g.poly(n, 3, 5), b = g.poly(n, 3, 5);
    EXPECT_EQ(a * b, integer_scaled_product(a, b));
  }
}

TEST(Poly, RingAxioms) {
  Gen g(testing::base_seed() + 2);
  for (int i = 0; i < 150; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const Poly a = g.poly(n, 3), b = g.poly(n, 3), c = g.poly(n, 3);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a - b) + b, a);
  }
}

TEST(Poly, CanonicalTermsHaveNoZeros) {
  const Poly p = P("x1 + x2 - x1", 2);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(P("x1 - x1", 1).size(), 0u);
  EXPECT_EQ(to_string(P("x1 - x1", 1)), "0");
}

TEST(Poly, TextRoundTripIsBitExact) {
  Gen g(testing::base_seed() + 3);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    const Poly p = g.poly(n, 3, 5);
    const std::string s = to_string(p);
    const Poly q = parse_poly(s, n);
    EXPECT_EQ(p, q);
    EXPECT_EQ(to_string(q), s);
  }
}

TEST(Poly, PrintsDescendingGradedLex) {
  EXPECT_EQ(to_string(P("1 + x2 + x1 + x1*x2 - 2/3*x2^2", 2)),
            "1 * x1 * x2 + -2/3 * x2^2 + 1 * x1 + 1 * x2 + 1");
}

TEST(Poly, RelaxedSyntax) {
  EXPECT_EQ(P("-x1*x1 + 2x2", 2), P("-1 * x1^2 + 2 * x2", 2));
  EXPECT_EQ(P(" - 3/6 * x1 ", 1), P("-1/2 * x1", 1));
  EXPECT_THROW(P("x1 +", 1), ParseError);
  EXPECT_THROW(P("", 1), ParseError);
  EXPECT_THROW(P("x1 ** 2", 1), ParseError);
}

TEST(PolyMap, IdentityAndSubstitution) {
  Gen g(testing::base_seed() + 4);
  const PolyMap gmap = g.map(2, 3, 2);
  EXPECT_EQ(compose(PolyMap::identity(3), gmap), gmap);
  const PolyMap f(1, {P("x1^2", 1)});
  const PolyMap h(1, {P("x1 + 1", 1)});
  EXPECT_EQ(compose(f, h)[0], P("x1 + 1", 1) * P("x1 + 1", 1));
  EXPECT_THROW(compose(f, gmap), ArityError);
}

TEST(PolyMap, CompositionIsAssociative) {
  Gen g(testing::base_seed() + 5);
  for (int i = 0; i < 30; ++i) {
    const PolyMap a = g.map(2, 2, 2), b = g.map(2, 2, 2), c = g.map(2, 2, 2);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Jacobian, ExampleAgreesWithFiniteDifferences) {
  const PolyMap f(2, {P("x1 + x2", 2), P("x1 * x2", 2)});
  const std::vector<Rational> at{1, 2};
  QMatrix expected(2, 2, Rational(0));
  expected(0, 0) = 1;
  expected(0, 1) = 1;
  expected(1, 0) = 2;
  expected(1, 1) = 1;
  EXPECT_EQ(f.jacobian_at(at), expected);
  // Forward differences at step 1 are exact for maps affine in each variable.
  for (std::size_t c = 0; c < 2; ++c) {
    auto shifted = at;
    shifted[c] += 1;
    const auto fp = f.evaluate(shifted), f0 = f.evaluate(at);
    for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(Rational(fp[r] - f0[r]), expected(r, c));
  }
  EXPECT_THROW(f.jacobian_at(std::vector<Rational>{1}), ArityError);
}

TEST(Jacobian, CentralDifferencesExactForQuadratics) {
  Gen g(testing::base_seed() + 6);
  for (int i = 0; i < 50; ++i) {
    const PolyMap f = g.map(3, 2, 2);
    const auto at = g.point(3);
    const QMatrix j = f.jacobian_at(at);
    for (std::size_t c = 0; c < 3; ++c) {
      auto up = at, down = at;
      up[c] += 1;
      down[c] -= 1;
      const auto fu = f.evaluate(up), fd = f.evaluate(down);
      for (std::size_t r = 0; r < 2; ++r) EXPECT_EQ(Rational((fu[r] - fd[r]) / 2), j(r, c));
    }
  }
}

TEST(Jacobian, LinearMapIsConstant) {
  const PolyMap f(2, {P("2 * x1 - x2", 2), P("1/3 * x2", 2)});
  Gen g(testing::base_seed() + 7);
  const QMatrix j0 = f.jacobian_at(g.point(2));
  EXPECT_EQ(f.jacobian_at(g.point(2)), j0);
}

TEST(Jacobian, ChainRule) {
  Gen g(testing::base_seed() + 8);
  for (int i = 0; i < 40; ++i) {
    const PolyMap a = g.map(2, 2, 2), b = g.map(3, 2, 2);
    const PMatrix lhs = compose(a, b).jacobian();
    const PMatrix rhs = substitute(a.jacobian(), b.components(), 3) * b.jacobian();
    EXPECT_EQ(lhs, rhs);
  }
}

TEST(Linsolve, Identity) {
  const QMatrix id = QMatrix::identity(3, Rational(0));
  const QVector b{1, Rational(2, 3), -4};
  const auto sol = linsolve(id, b);
  ASSERT_TRUE(sol.consistent());
  EXPECT_EQ(*sol.particular, b);
  EXPECT_TRUE(sol.kernel.empty());
}

TEST(Linsolve, RankDeficientExamples) {
  QMatrix a(2, 2, Rational(0));
  a(0, 0) = 1;
  a(0, 1) = 1;
  a(1, 0) = 2;
  a(1, 1) = 2;
  auto sol = linsolve(a, {1, 2});
  ASSERT_TRUE(sol.consistent());
  EXPECT_EQ(sol.rank, 1u);
  EXPECT_EQ(*sol.particular, (QVector{1, 0}));
  ASSERT_EQ(sol.kernel.size(), 1u);
  EXPECT_EQ(sol.kernel[0], (QVector{-1, 1}));
  EXPECT_FALSE(linsolve(a, {1, 3}).consistent());
}

TEST(Linsolve, SolutionsSatisfySystem) {
  Gen g(testing::base_seed() + 9);
  for (int i = 0; i < 100; ++i) {
    const std::size_t rows = static_cast<std::size_t>(g.integer(1, 4));
    const std::size_t cols = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix a(rows, cols, Rational(0));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) a(r, c) = g.integer(0, 2) == 0 ? Rational(0) : g.rational();
    // Right-hand side in the image, so the system is consistent.
    const auto x = g.point(cols);
    const QVector b = a * std::span<const Rational>(x);
    const auto sol = linsolve(a, b);
    ASSERT_TRUE(sol.consistent());
    EXPECT_EQ(a * std::span<const Rational>(*sol.particular), b);
    EXPECT_EQ(sol.rank + sol.kernel.size(), cols);
    for (const auto& k : sol.kernel) EXPECT_EQ(a * std::span<const Rational>(k), QVector(rows, Rational(0)));
  }
}

TEST(Matrix, DeterminantAndInverse) {
  Gen g(testing::base_seed() + 10);
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = static_cast<std::size_t>(g.integer(1, 4));
    QMatrix a(n, n, Rational(0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = g.rational();
    const Rational det = determinant(a);
    const auto inv = inverse(a);
    EXPECT_EQ(inv.has_value(), det != 0);
    if (inv) {
      EXPECT_EQ(a * *inv, QMatrix::identity(n, Rational(0)));
      QMatrix adj = adjugate(a);
      adj *= Rational(1 / det);
      EXPECT_EQ(adj, *inv);
    }
  }
}

TEST(Matrix, ExteriorPowerIsMultiplicative) {
  Gen g(testing::base_seed() + 11);
  for (int i = 0; i < 20; ++i) {
    QMatrix a(3, 3, Rational(0)), b(3, 3, Rational(0));
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) {
        a(r, c) = g.rational();
        b(r, c) = g.rational();
      }
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(exterior_power(a * b, k), exterior_power(a, k) * exterior_power(b, k));
  }
}

TEST(Matrix, UnimodularPolyInverse) {
  PMatrix m(2, 2, Poly(1));
  m(0, 0) = P("1", 1);
  m(0, 1) = P("x1^2", 1);
  m(1, 1) = P("2", 1);
  const PMatrix inv = unimodular_inverse(m);
  EXPECT_EQ(m * inv, PMatrix::identity(2, Poly(1)));
  m(1, 1) = P("x1", 1);
  EXPECT_THROW(unimodular_inverse(m), SplittingError);
}

TEST(Subsets, ColexRank) {
  const auto subsets = k_subsets(5, 2);
  ASSERT_EQ(subsets.size(), 10u);
  for (std::size_t i = 0; i < subsets.size(); ++i) EXPECT_EQ(subset_rank(subsets[i]), i);
  EXPECT_EQ(shuffle_sign(0b10, 0b01), -1);
  EXPECT_EQ(shuffle_sign(0b01, 0b10), 1);
}

TEST(Sampling, SampledModeAgreesWithExactOnDistinctPolys) {
  const Poly a = P("x1 * x2 + 1", 2), b = P("x1 * x2 + x1", 2);
  CheckOptions opts{CheckMode::sampled, 7, 25};
  EXPECT_FALSE(polys_equal(a, b, opts));
  EXPECT_TRUE(polys_equal(a, a, opts));
  EXPECT_FALSE(find_witness(a, b, opts).empty());
  RationalSampler s1(3), s2(3);
  EXPECT_EQ(s1.point(5), s2.point(5));
}

}  // namespace
}  // namespace affinoid
