#pragma once

#include <vector>

#include "affinoid/exterior/alternating.hpp"
#include "affinoid/groupoid/groupoid.hpp"
#include "affinoid/verdict.hpp"

namespace affinoid {

using Point = std::vector<Rational>;

/// s(xi) in A*_{s(g)}: pairing with the left-translated frame.
Point covector_source(const Groupoid& g, const Point& at, const Point& xi);
/// t(xi) in A*_{t(g)}: pairing with the right-translated frame.
Point covector_target(const Groupoid& g, const Point& at, const Point& xi);

/// Product of xi at g and eta at h in T*G, i.e. the covector zeta at gh with
/// zeta(X.Y) = xi(X) + eta(Y) on all composable tangent pairs. Throws
/// ComposabilityError if (g,h) or (xi,eta) is not composable and
/// StructureError if the defining linear system has no unique solution.
Point multiply_covectors(const Groupoid& g, const Point& at_g, const Point& at_h, const Point& xi, const Point& eta);

/// Product X.Y in the tangent groupoid; requires ds X = dt Y.
Point multiply_vectors(const Groupoid& g, const Point& at_g, const Point& at_h, const Point& x, const Point& y);

/// The unit of T*G over alpha in A*_x: kills the unit-embedded TM and
/// restricts to alpha on A.
Point unit_covector(const Groupoid& g, const Point& base, const Point& alpha);
/// d(unit) applied to v in T_x M.
Point unit_vector(const Groupoid& g, const Point& base, const Point& v);

/// Basis of the tangent space of G^(2) at the pair with coordinates p
/// (columns of d comp_param), split into (X, Y) halves.
std::vector<std::pair<Point, Point>> composable_tangent_basis(const Groupoid& g, const Point& p);

enum class OracleShape { triangles, parallelograms };

/// Brute-force coisotropy test at seeded sample points of the triangle graph
/// (sign pattern Pi + Pi + (-1)^{k+1} Pi) or of the parallelogram set
/// (Pi + (-1)^{k+1} Pi + (-1)^{k+1} Pi + Pi). At each point a conormal basis
/// is computed exactly and the signed multivector is evaluated on every
/// increasing k-tuple of basis covectors. The witness of a failure is the
/// parameter point.
Verdict coisotropy_oracle(const Groupoid& g, const MultiVectorField& pi, OracleShape shape,
                          const CheckOptions& options);

}  // namespace affinoid
