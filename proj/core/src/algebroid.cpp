#include "affinoid/groupoid/algebroid.hpp"

namespace affinoid {

AlgebroidSection make_section(const Groupoid& g, std::size_t p, std::size_t q) {
  return AlgebroidSection(g.rank(), g.dim_M(), g.dim_M(), p, q);
}

MultiVectorField make_mv_section(const Groupoid& g, std::size_t p) {
  return MultiVectorField(g.rank(), g.dim_M(), p);
}

namespace {

void check_section(const Groupoid& g, const AlgebroidSection& f) {
  if (f.contra_dim() != g.rank() || f.cov_dim() != g.dim_M() || f.num_vars() != g.dim_M()) {
    throw ArityError("not a section of wedge A (x) wedge T*M for this groupoid");
  }
}

TensorField translate(const Groupoid& g, const AlgebroidSection& f, const PMatrix& frame_pow, const PMatrix& jac_pow,
                      const PolyMap& base_map) {
  check_section(g, f);
  const std::size_t n = g.dim_G();
  TensorField out(n, f.p(), f.q());
  const auto a_sets = f.contra_sets();
  const auto m_sets = f.cov_sets();
  const auto g_contra = k_subsets(n, f.p());
  const auto g_cov = k_subsets(n, f.q());
  for (std::size_t a = 0; a < a_sets.size(); ++a) {
    for (std::size_t b = 0; b < m_sets.size(); ++b) {
      const Poly& coeff = f.at(a_sets[a], m_sets[b]);
      if (coeff.is_zero()) continue;
      const Poly c = base_map.pull(coeff);
      for (std::size_t l = 0; l < g_contra.size(); ++l) {
        const Poly& fr = frame_pow(l, a);
        if (fr.is_zero()) continue;
        const Poly cf = c * fr;
        for (std::size_t k = 0; k < g_cov.size(); ++k) {
          const Poly& j = jac_pow(b, k);
          if (!j.is_zero()) out.at(g_contra[l], g_cov[k]) += cf * j;
        }
      }
    }
  }
  return out;
}

}  // namespace

static bool beyond_rank(const Groupoid& g, const AlgebroidSection& f) { return f.p() > g.rank() || f.q() > g.dim_M(); }

TensorField translate_right(const Groupoid& g, const AlgebroidSection& f) {
  if (beyond_rank(g, f)) return TensorField(g.dim_G(), f.p(), f.q());
  return translate(g, f, g.right_frame_power(f.p()), g.target_jacobian_power(f.q()), g.tgt());
}

TensorField translate_left(const Groupoid& g, const AlgebroidSection& f) {
  if (beyond_rank(g, f)) return TensorField(g.dim_G(), f.p(), f.q());
  return translate(g, f, g.left_frame_power(f.p()), g.source_jacobian_power(f.q()), g.src());
}

AlgebroidSection restrict_project(const Groupoid& g, const TensorField& big) {
  const std::size_t n = g.dim_G(), m = g.dim_M();
  if (big.contra_dim() != n || big.cov_dim() != n || big.num_vars() != n) {
    throw ArityError("restrict_project expects a tensor field on the groupoid");
  }
  const std::size_t p = big.p(), q = big.q();
  AlgebroidSection out(g.rank(), m, m, p, q);
  if (p > g.rank() || q > m) return out;
  const TensorField at_units = big.map([&g](const Poly& c) { return g.unit().pull(c); }, m);
  const PMatrix& sinv = g.splitting_inverse_power(p);  // split subsets x coordinate subsets
  const PMatrix& spl = g.splitting_power(q);           // coordinate subsets x split subsets
  const auto coord_p = k_subsets(n, p), coord_q = k_subsets(n, q);
  for (const Subset a_set : out.contra_sets()) {
    const std::size_t row = subset_rank(a_set << m);
    for (const Subset k_set : out.cov_sets()) {
      const std::size_t col = subset_rank(k_set);
      Poly acc(m);
      for (std::size_t l = 0; l < coord_p.size(); ++l) {
        const Poly& left = sinv(row, l);
        if (left.is_zero()) continue;
        for (std::size_t nn = 0; nn < coord_q.size(); ++nn) {
          const Poly& coeff = at_units.at(coord_p[l], coord_q[nn]);
          if (coeff.is_zero() || spl(nn, col).is_zero()) continue;
          acc += left * coeff * spl(nn, col);
        }
      }
      out.at(a_set, k_set) = std::move(acc);
    }
  }
  return out;
}

MultiVectorField translate_right(const Groupoid& g, const MultiVectorField& pi) {
  return translate_right(g, TensorField::from_multivector(pi, g.dim_M())).to_multivector();
}

MultiVectorField translate_left(const Groupoid& g, const MultiVectorField& pi) {
  return translate_left(g, TensorField::from_multivector(pi, g.dim_M())).to_multivector();
}

MultiVectorField restrict_project(const Groupoid& g, const MultiVectorField& big_pi) {
  return restrict_project(g, TensorField::from_multivector(big_pi)).to_multivector();
}

Verdict right_invariant(const Groupoid& g, const MultiVectorField& w, const CheckOptions& options) {
  return compare(w, translate_right(g, restrict_project(g, w)), options, "right invariance");
}

Verdict left_invariant(const Groupoid& g, const MultiVectorField& w, const CheckOptions& options) {
  return compare(w, translate_left(g, restrict_project(g, w)), options, "left invariance");
}

LieAlgebroidData lie_algebroid(const Groupoid& g) {
  LieAlgebroidData out;
  const std::size_t m = g.dim_M(), r = g.rank(), n = g.dim_G();
  out.dim_M = m;
  out.rank = r;
  const PMatrix dt_units = substitute(g.tgt().jacobian(), g.unit().components(), m);
  out.anchor = dt_units * g.splitting_A();
  std::vector<MultiVectorField> right;
  for (std::size_t a = 0; a < r; ++a) {
    MultiVectorField e(n, n, 1);
    for (std::size_t i = 0; i < n; ++i) e[Subset{1} << i] = g.right_frame()(i, a);
    right.push_back(std::move(e));
  }
  out.structure.assign(r, std::vector<MultiVectorField>(r, MultiVectorField(r, m, 1)));
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = a + 1; b < r; ++b) {
      out.structure[a][b] = restrict_project(g, schouten_bracket(right[a], right[b]));
      out.structure[b][a] = -out.structure[a][b];
    }
  }
  return out;
}

MultiVectorField anchor_of(const LieAlgebroidData& a, const MultiVectorField& u) {
  if (u.degree() != 1 || u.generators() != a.rank || u.num_vars() != a.dim_M) {
    throw ArityError("anchor expects a degree-1 section");
  }
  MultiVectorField out(a.dim_M, a.dim_M, 1);
  for (std::size_t i = 0; i < a.dim_M; ++i) {
    Poly acc(a.dim_M);
    for (std::size_t b = 0; b < a.rank; ++b) acc += a.anchor(i, b) * u[Subset{1} << b];
    out[Subset{1} << i] = std::move(acc);
  }
  return out;
}

namespace {

/// rho(e_a) applied to every coefficient.
MultiVectorField anchor_derivative(const LieAlgebroidData& alg, std::size_t a, const MultiVectorField& p) {
  MultiVectorField out(p.generators(), p.num_vars(), p.degree());
  for (std::size_t i = 0; i < alg.dim_M; ++i) {
    const Poly& rho = alg.anchor(i, a);
    if (rho.is_zero()) continue;
    out += rho * coefficient_derivative(p, i);
  }
  return out;
}

}  // namespace

MultiVectorField algebroid_bracket(const LieAlgebroidData& alg, const MultiVectorField& p, const MultiVectorField& q) {
  if (p.generators() != alg.rank || q.generators() != alg.rank || p.num_vars() != alg.dim_M ||
      q.num_vars() != alg.dim_M) {
    throw ArityError("algebroid bracket of fields that are not sections of wedge A");
  }
  if (p.degree() + q.degree() == 0) throw DegreeError("algebroid bracket of two functions");
  MultiVectorField out(alg.rank, alg.dim_M, p.degree() + q.degree() - 1);
  for (std::size_t a = 0; a < alg.rank; ++a) {
    if (p.degree() > 0) out += wedge(right_derivative(p, a), anchor_derivative(alg, a, q));
    if (q.degree() > 0) out -= wedge(anchor_derivative(alg, a, p), left_derivative(q, a));
  }
  if (p.degree() > 0 && q.degree() > 0) {
    for (std::size_t a = 0; a < alg.rank; ++a) {
      const MultiVectorField pa = right_derivative(p, a);
      if (pa.is_zero()) continue;
      for (std::size_t b = 0; b < alg.rank; ++b) {
        if (alg.structure[a][b].is_zero()) continue;
        out += wedge(wedge(pa, alg.structure[a][b]), left_derivative(q, b));
      }
    }
  }
  return out;
}

Verdict check_algebroid(const LieAlgebroidData& alg, const CheckOptions& options) {
  const std::size_t r = alg.rank, m = alg.dim_M;
  auto frame = [&](std::size_t a) { return MultiVectorField::basis(r, Subset{1} << a, Poly::constant(m, 1)); };
  Verdict v;
  for (std::size_t a = 0; a < r; ++a) {
    for (std::size_t b = 0; b < r; ++b) {
      const MultiVectorField ab = algebroid_bracket(alg, frame(a), frame(b));
      if (m > 0) {
        v &= compare(anchor_of(alg, ab), schouten_bracket(anchor_of(alg, frame(a)), anchor_of(alg, frame(b))),
                     options, "anchor is a bracket morphism");
      }
      for (std::size_t c = 0; c < r; ++c) {
        const MultiVectorField lhs = algebroid_bracket(alg, frame(a), algebroid_bracket(alg, frame(b), frame(c)));
        const MultiVectorField rhs = algebroid_bracket(alg, algebroid_bracket(alg, frame(a), frame(b)), frame(c)) +
                                     algebroid_bracket(alg, frame(b), algebroid_bracket(alg, frame(a), frame(c)));
        v &= compare(lhs, rhs, options, "Jacobi identity on frame sections");
      }
    }
  }
  return v;
}

}  // namespace affinoid
