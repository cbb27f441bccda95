#pragma once

#include <vector>

#include "affinoid/groupoid/algebroid.hpp"
#include "affinoid/groupoid/pointwise.hpp"

namespace affinoid {

/// A predicate decided twice: by the bracket characterization and by the
/// brute-force coisotropy oracle.
struct DualVerdict {
  Verdict fast;
  Verdict oracle;

  bool value() const { return fast.pass; }
  bool agree() const { return fast.pass == oracle.pass; }
};

/// [Pi, ->e_a] right-invariant for every frame section and i_{t^* dx_j} Pi
/// right-invariant for every base coordinate.
Verdict affine_mv_fast(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});
/// Affine and pr_{wedge^k A} Pi|_M = 0.
Verdict multiplicative_mv_fast(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});

DualVerdict check_affine_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});
DualVerdict check_multiplicative_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});

/// Both paths are run; a disagreement throws StructureError.
bool is_affine_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});
bool is_multiplicative_mv(const Groupoid& g, const MultiVectorField& pi, const CheckOptions& options = {});

/// An affine k-vector field (k >= 1) together with its core
/// pi = pr_{wedge^k A} Pi|_M. The groupoid must outlive the value.
class AffineMV {
 public:
  /// Throws StructureError unless pi passes affine_mv_fast.
  AffineMV(const Groupoid& g, MultiVectorField pi, const CheckOptions& options = {});

  /// Skips the affinity check; for results of operations that preserve it.
  static AffineMV trusted(const Groupoid& g, MultiVectorField pi);

  const Groupoid& groupoid() const { return *g_; }
  const MultiVectorField& field() const { return field_; }
  const MultiVectorField& core() const { return core_; }
  std::size_t degree() const { return field_.degree(); }

  /// Pi_r = Pi - ->pi, the source in the 2-vector space.
  MultiVectorField source() const;
  /// Pi_l = Pi - <-pi, the target.
  MultiVectorField target() const;

  friend AffineMV operator+(const AffineMV& a, const AffineMV& b);
  friend AffineMV operator-(const AffineMV& a, const AffineMV& b);
  friend AffineMV operator*(const Rational& c, const AffineMV& a);

 private:
  AffineMV(const Groupoid* g, MultiVectorField pi, MultiVectorField core);

  const Groupoid* g_;
  MultiVectorField field_;
  MultiVectorField core_;
};

struct SourceTarget {
  MultiVectorField source;
  MultiVectorField target;
};
SourceTarget mv_source_target(const AffineMV& p);

/// Pi * Pi' = Pi + <-pi'. Requires s(P) = t(Q), otherwise ComposabilityError.
AffineMV mv_compose(const AffineMV& p, const AffineMV& q, const CheckOptions& options = {});
/// Pi^{-1} = Pi - ->pi - <-pi.
AffineMV mv_inverse(const AffineMV& p);
/// The identity arrow at a multiplicative field; throws StructureError if
/// gamma is not multiplicative.
AffineMV mv_unit(const Groupoid& g, const MultiVectorField& gamma, const CheckOptions& options = {});

/// [(P1,P2)*(P1',P2')] = [P1,P2]*[P1',P2'] with the Schouten bracket.
/// Requires s(P1) = t(P1') and s(P2) = t(P2').
Verdict lie2_functoriality_check(const AffineMV& p1, const AffineMV& p1p, const AffineMV& p2, const AffineMV& p2p,
                                 const CheckOptions& options = {});

/// The k-differential of an affine k-vector field in the splitting frame.
struct KDifferential {
  LieAlgebroidData algebroid;
  std::size_t degree = 0;
  /// delta0[j] = delta(x_j), a section of wedge^{k-1} A.
  std::vector<MultiVectorField> delta0;
  /// delta1[a] = delta(e_a), a section of wedge^k A.
  std::vector<MultiVectorField> delta1;

  /// delta(f) by the chain rule over the coordinate values.
  MultiVectorField apply(const Poly& f) const;
  /// Extension to sections of wedge^l A as a derivation of degree k-1:
  /// delta(f e_I) = delta(f) ^ e_I + f delta(e_I).
  MultiVectorField apply(const MultiVectorField& section) const;
};

/// delta_Pi(u) read off the groupoid: restrict_project([Pi, ->u]) after
/// checking that the bracket is right-invariant (StructureError otherwise).
MultiVectorField delta_direct(const AffineMV& p, const MultiVectorField& section,
                              const CheckOptions& options = {});

/// delta0 from [Pi, t^* x_j] and delta1 from [Pi, ->e_a].
KDifferential k_differential_of(const AffineMV& p, const CheckOptions& options = {});

/// The k-differential axioms, each side computed independently: Leibniz on
/// products of coordinates and on x_j e_a (directly from the groupoid), and
/// the derivation law on frame brackets.
Verdict check_k_differential(const AffineMV& p, const KDifferential& d, const CheckOptions& options = {});

/// pr[Pi,Pi']|_M = delta_Pi(pi') - (-1)^{(k-1)(l-1)} delta_Pi'(pi) - [pi,pi'].
Verdict decomposition_iso_check(const AffineMV& p, const AffineMV& q, const CheckOptions& options = {});

struct PoissonReport {
  bool is_poisson = false;
  bool right_poisson = false;  // [Pi_r, Pi_r] = 0
  bool left_poisson = false;   // [Pi_l, Pi_l] = 0
  bool bracket_right_invariant = false;
  bool bracket_left_invariant = false;
  /// 2 delta_{Pi_r} pi + [pi,pi], a section of wedge^3 A.
  MultiVectorField obstruction;
  bool inverse_is_poisson = false;
  /// Every clause of the Poisson criterion and its corollary held.
  Verdict consistent;
};

/// Requires degree 2 (DegreeError otherwise).
PoissonReport poisson_checks(const AffineMV& p, const CheckOptions& options = {});

}  // namespace affinoid
