#pragma once

#include <vector>

#include "affinoid/exterior/calculus.hpp"
#include "affinoid/exterior/tensor.hpp"
#include "affinoid/groupoid/groupoid.hpp"
#include "affinoid/verdict.hpp"

namespace affinoid {

/// A section of wedge^p A (x) wedge^q T*M in the splitting frame: a
/// TensorField with contra_dim = rank A, cov_dim = num_vars = dim_M.
using AlgebroidSection = TensorField;

AlgebroidSection make_section(const Groupoid& g, std::size_t p, std::size_t q);
/// Multivector sections (q = 0) are also handled as MultiVectorField with
/// generators = rank A and num_vars = dim_M.
MultiVectorField make_mv_section(const Groupoid& g, std::size_t p);

/// Right translation: the wedge^p A part is pushed by dR_g from t(g) and the
/// wedge^q T*M part is pulled back along t.
TensorField translate_right(const Groupoid& g, const AlgebroidSection& f);
/// Left translation through s, with the minus sign of the left-invariant
/// convention on every A slot.
TensorField translate_left(const Groupoid& g, const AlgebroidSection& f);
/// Restriction of F to the units followed by projection onto the pure
/// wedge^p A (x) wedge^q T*M block of the splitting.
AlgebroidSection restrict_project(const Groupoid& g, const TensorField& f);

MultiVectorField translate_right(const Groupoid& g, const MultiVectorField& pi);
MultiVectorField translate_left(const Groupoid& g, const MultiVectorField& pi);
MultiVectorField restrict_project(const Groupoid& g, const MultiVectorField& big_pi);

/// W is right-invariant when W = translate_right(restrict_project(W)).
Verdict right_invariant(const Groupoid& g, const MultiVectorField& w, const CheckOptions& options);
Verdict left_invariant(const Groupoid& g, const MultiVectorField& w, const CheckOptions& options);

/// Anchor and structure functions of the Lie algebroid in the splitting frame.
struct LieAlgebroidData {
  std::size_t dim_M = 0;
  std::size_t rank = 0;
  /// dim_M x rank over the base: column a is rho(e_a).
  PMatrix anchor;
  /// structure[a][b] = [e_a, e_b]_A as a degree-1 section.
  std::vector<std::vector<MultiVectorField>> structure;
};

/// Anchor = dt on A at the units; bracket of frame sections = projection of
/// the Schouten bracket of their right translations.
LieAlgebroidData lie_algebroid(const Groupoid& g);

/// rho(u) as a vector field on M, for a degree-1 section u.
MultiVectorField anchor_of(const LieAlgebroidData& a, const MultiVectorField& u);

/// Gerstenhaber bracket on sections of wedge A, built from the anchor and the
/// structure functions alone (no groupoid involved):
///   [P,Q] = sum_a (P d^R_a) ^ rho_a(Q) - rho_a(P) ^ (d^L_a Q)
///         + sum_{a,b} (P d^R_a) ^ [e_a,e_b] ^ (d^L_b Q)
/// where rho_a acts on coefficients as the vector field rho(e_a).
MultiVectorField algebroid_bracket(const LieAlgebroidData& a, const MultiVectorField& p, const MultiVectorField& q);

/// rho[u,v] = [rho u, rho v] on frame pairs and the Jacobi identity on frame
/// triples.
Verdict check_algebroid(const LieAlgebroidData& a, const CheckOptions& options);

}  // namespace affinoid
