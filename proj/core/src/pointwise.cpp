#include "affinoid/groupoid/pointwise.hpp"

#include "affinoid/exterior/calculus.hpp"

namespace affinoid {

namespace {

Rational dot(const Point& a, const Point& b) {
  Rational r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Point pair_frame(const PMatrix& frame, const Point& at, const Point& xi) {
  if (xi.size() != frame.rows()) throw ArityError("covector has the wrong dimension");
  const QMatrix f = evaluate(frame, at);
  Point out(f.cols(), Rational(0));
  for (std::size_t a = 0; a < f.cols(); ++a)
    for (std::size_t i = 0; i < f.rows(); ++i) out[a] += xi[i] * f(i, a);
  return out;
}

Point concat(Point a, const Point& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

Point covector_source(const Groupoid& g, const Point& at, const Point& xi) {
  return pair_frame(g.left_frame(), at, xi);
}

Point covector_target(const Groupoid& g, const Point& at, const Point& xi) {
  return pair_frame(g.right_frame(), at, xi);
}

Point multiply_covectors(const Groupoid& g, const Point& at_g, const Point& at_h, const Point& xi, const Point& eta) {
  if (!g.composable(at_g, at_h)) throw ComposabilityError("arrows are not composable: s(g) != t(h)");
  if (covector_source(g, at_g, xi) != covector_target(g, at_h, eta)) {
    throw ComposabilityError("covectors are not composable: s(xi) != t(eta)");
  }
  const Point p = g.pair_coordinates().evaluate(concat(at_g, at_h));
  const QMatrix jphi = g.comp_param().jacobian_at(p);
  const QMatrix jm = g.mult().jacobian_at(p);
  const Point rhs = jphi.transpose() * std::span<const Rational>(concat(xi, eta));
  const LinearSolution sol = linsolve(jm.transpose(), rhs);
  if (!sol.consistent() || !sol.kernel.empty()) {
    throw StructureError("cotangent multiplication has no unique solution");
  }
  return *sol.particular;
}

Point multiply_vectors(const Groupoid& g, const Point& at_g, const Point& at_h, const Point& x, const Point& y) {
  if (!g.composable(at_g, at_h)) throw ComposabilityError("arrows are not composable: s(g) != t(h)");
  if (x.size() != g.dim_G() || y.size() != g.dim_G()) throw ArityError("tangent vector has the wrong dimension");
  const QMatrix ds = g.src().jacobian_at(at_g);
  const QMatrix dt = g.tgt().jacobian_at(at_h);
  if (ds * std::span<const Rational>(x) != dt * std::span<const Rational>(y)) {
    throw ComposabilityError("tangent vectors are not composable: ds X != dt Y");
  }
  const QMatrix dprod = g.product().jacobian_at(concat(at_g, at_h));
  return dprod * std::span<const Rational>(concat(x, y));
}

Point unit_covector(const Groupoid& g, const Point& base, const Point& alpha) {
  if (alpha.size() != g.rank()) throw ArityError("A* element has the wrong dimension");
  const QMatrix s = evaluate(g.splitting(), base);
  Point rhs(g.dim_M(), Rational(0));
  rhs.insert(rhs.end(), alpha.begin(), alpha.end());
  const LinearSolution sol = linsolve(s.transpose(), rhs);
  if (!sol.consistent()) throw SplittingError("splitting singular at a unit point");
  return *sol.particular;
}

Point unit_vector(const Groupoid& g, const Point& base, const Point& v) {
  return g.unit().jacobian_at(base) * std::span<const Rational>(v);
}

std::vector<std::pair<Point, Point>> composable_tangent_basis(const Groupoid& g, const Point& p) {
  const QMatrix j = g.comp_param().jacobian_at(p);
  std::vector<std::pair<Point, Point>> out;
  const std::size_t n = g.dim_G();
  for (std::size_t c = 0; c < j.cols(); ++c) {
    Point x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = j(i, c);
      y[i] = j(n + i, c);
    }
    out.emplace_back(std::move(x), std::move(y));
  }
  return out;
}

Verdict coisotropy_oracle(const Groupoid& g, const MultiVectorField& pi, OracleShape shape,
                          const CheckOptions& options) {
  const std::size_t n = g.dim_G(), k = pi.degree();
  if (pi.generators() != n || pi.num_vars() != n) throw ArityError("multivector does not live on the groupoid");
  if (k == 0) throw DegreeError("coisotropy is defined for k >= 1");
  const int odd = (k + 1) % 2 ? -1 : 1;
  const PolyMap& param = shape == OracleShape::triangles ? g.triangles() : g.parallelograms();
  const std::vector<int> signs =
      shape == OracleShape::triangles ? std::vector<int>{1, 1, odd} : std::vector<int>{1, odd, odd, 1};
  const std::size_t factors = signs.size();
  const auto index_sets = pi.index_sets();
  RationalSampler sampler(options.seed);
  for (std::size_t sample = 0; sample < options.samples; ++sample) {
    const Point q = sampler.point(param.domain_dim());
    const Point image = param.evaluate(q);
    const QMatrix j = param.jacobian_at(q);
    const auto conormal = kernel_basis(j.transpose());
    if (conormal.size() < k) continue;
    std::vector<std::vector<Rational>> coeffs;
    for (std::size_t f = 0; f < factors; ++f) {
      const Point at(image.begin() + f * n, image.begin() + (f + 1) * n);
      coeffs.push_back(pi.evaluate(at));
    }
    for (const Subset choice : k_subsets(conormal.size(), k)) {
      const auto picked = subset_elements(choice);
      Rational value = 0;
      for (std::size_t f = 0; f < factors; ++f) {
        std::vector<std::vector<Rational>> slots;
        for (auto idx : picked) slots.emplace_back(conormal[idx].begin() + f * n, conormal[idx].begin() + (f + 1) * n);
        Rational part = 0;
        for (std::size_t s = 0; s < index_sets.size(); ++s) {
          if (coeffs[f][s] != 0) part += coeffs[f][s] * slot_determinant(index_sets[s], slots);
        }
        value += signs[f] * part;
      }
      if (value != 0) {
        return Verdict::fail(std::string(shape == OracleShape::triangles ? "triangle graph" : "parallelogram set") +
                                 " is not coisotropic",
                             q);
      }
    }
  }
  return Verdict::ok();
}

}  // namespace affinoid
