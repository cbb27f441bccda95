#pragma once

#include <span>
#include <vector>

#include "affinoid/exact/matrix.hpp"
#include "affinoid/exact/poly_map.hpp"
#include "affinoid/exterior/alternating.hpp"

namespace affinoid {

/// Exterior product; degrees add and a^b = (-1)^{|a||b|} b^a.
template <Variance V>
AlternatingField<V> wedge(const AlternatingField<V>& a, const AlternatingField<V>& b);

extern template MultiVectorField wedge(const MultiVectorField&, const MultiVectorField&);
extern template DifferentialForm wedge(const DifferentialForm&, const DifferentialForm&);

/// Algebraic derivative removing generator i from the left: e_i ^ e_J -> e_J.
template <Variance V>
AlternatingField<V> left_derivative(const AlternatingField<V>& a, std::size_t i);
/// Same, removing from the right: e_J ^ e_i -> e_J.
template <Variance V>
AlternatingField<V> right_derivative(const AlternatingField<V>& a, std::size_t i);

/// Partial derivative of every coefficient with respect to coordinate `var`.
template <Variance V>
AlternatingField<V> coefficient_derivative(const AlternatingField<V>& a, std::size_t var);

/// Contraction of a 1-form into a k-vector field from the left.
MultiVectorField interior_product(const DifferentialForm& xi, const MultiVectorField& p);
/// Contraction of a vector field into a k-form from the left.
DifferentialForm interior_product(const MultiVectorField& x, const DifferentialForm& w);

/// Schouten-Nijenhuis bracket with [X, f] = X(f) and
/// [P, Q] = -(-1)^{(p-1)(q-1)} [Q, P].
MultiVectorField schouten_bracket(const MultiVectorField& p, const MultiVectorField& q);

DifferentialForm derham_d(const DifferentialForm& w);

/// L_X w = i_X dw + d i_X w.
DifferentialForm lie_derivative(const MultiVectorField& x, const DifferentialForm& w);

/// f^* w for w on the codomain of f.
DifferentialForm pullback(const PolyMap& f, const DifferentialForm& w);

/// Pointwise action of the k-th exterior power of J on a coefficient array.
std::vector<Rational> pushforward_linear(const QMatrix& j, std::span<const Rational> coeffs, std::size_t k);

/// Applies the exterior power of a polynomial bundle map J (rows = new
/// generators, cols = old generators) to a contravariant field.
MultiVectorField push(const PMatrix& j, const MultiVectorField& p);

/// Covariant transport: for a bundle map S (old generators x new generators)
/// the result has coefficient sum_L det S[L, K] w_L on K; this is the pullback
/// of w through S.
DifferentialForm pull(const PMatrix& s, const DifferentialForm& w);

/// P(xi_1, ..., xi_k) at a point; covectors are given in the generator basis.
Rational evaluate(const MultiVectorField& p, std::span<const Rational> point,
                  const std::vector<std::vector<Rational>>& covectors);
/// w(X_1, ..., X_k) at a point.
Rational evaluate(const DifferentialForm& w, std::span<const Rational> point,
                  const std::vector<std::vector<Rational>>& vectors);

/// Determinant of the pairing matrix [v_a(e_{i_b})] for the index set s.
Rational slot_determinant(Subset s, const std::vector<std::vector<Rational>>& slots);

}  // namespace affinoid
