#pragma once

#include <string>
#include <vector>

#include "affinoid/affine/forms.hpp"
#include "affinoid/affine/multivector.hpp"

namespace affinoid {

/// F(gh) = F(g) + F(h) - F(s(g)) on the composable-pair space.
Verdict affine_function_identity(const Groupoid& g, const Poly& f, const CheckOptions& options = {});
bool is_affine_function(const Groupoid& g, const Poly& f, const CheckOptions& options = {});
/// Affine and F|_M = 0.
bool is_multiplicative_function(const Groupoid& g, const Poly& f, const CheckOptions& options = {});

/// A point of Gamma = (+^q TG) (+) (+^p T*G): an arrow with q tangent vectors
/// and p covectors at it.
struct GammaPoint {
  Point base;
  std::vector<Point> vectors;
  std::vector<Point> covectors;
};

/// Full contraction of F with the slot data. ArityError on a slot count or
/// length mismatch.
Rational tensor_eval_on_Gamma(const Groupoid& g, const TensorField& f, const GammaPoint& point);

/// The unit of Gamma over s(point): d(unit) ds X on every tangent slot and
/// the unit covector over s(xi) on every cotangent slot.
GammaPoint gamma_source_unit(const Groupoid& g, const GammaPoint& point);

/// Products of a composable pair of Gamma points, built slotwise from
/// multiply_vectors and multiply_covectors.
GammaPoint gamma_multiply(const Groupoid& g, const GammaPoint& a, const GammaPoint& b);

enum class TensorLaw { affine, multiplicative };

/// The affine (or multiplicative) function identity on Gamma at seeded
/// composable arrows. The identity is multilinear and alternating in the
/// slot pairs, so at each arrow pair the slots run over increasing tuples
/// of a basis of composable tangent pairs and of composable covector pairs.
/// Base points always come from the sampler (options.samples of them); the
/// witness of a failure is the composable-pair parameter.
Verdict gamma_identity(const Groupoid& g, const TensorField& f, TensorLaw law, const CheckOptions& options = {});

bool is_affine_tensor(const Groupoid& g, const TensorField& f, const CheckOptions& options = {});
bool is_multiplicative_tensor(const Groupoid& g, const TensorField& f, const CheckOptions& options = {});

/// An affine (p,q)-tensor with f = pr F|_M. The groupoid must outlive it.
class AffineTensor {
 public:
  /// Throws StructureError unless the Gamma identity holds.
  AffineTensor(const Groupoid& g, TensorField f, const CheckOptions& options = {});
  static AffineTensor trusted(const Groupoid& g, TensorField f);

  const Groupoid& groupoid() const { return *g_; }
  const TensorField& field() const { return field_; }
  const AlgebroidSection& core() const { return core_; }

  /// F_r = F - ->f.
  TensorField source() const;
  /// F_l = F - <-f.
  TensorField target() const;

  friend AffineTensor operator+(const AffineTensor& a, const AffineTensor& b);
  friend AffineTensor operator*(const Rational& c, const AffineTensor& a);

 private:
  AffineTensor(const Groupoid* g, TensorField f, AlgebroidSection core);

  const Groupoid* g_;
  TensorField field_;
  AlgebroidSection core_;
};

struct TensorSourceTarget {
  TensorField source;
  TensorField target;
};
TensorSourceTarget tensor_source_target(const AffineTensor& t);

/// F1 * F2 = F1 + <-f2; requires (F1)_r = (F2)_l, otherwise ComposabilityError.
AffineTensor tensor_compose(const AffineTensor& a, const AffineTensor& b, const CheckOptions& options = {});
/// F - ->f - <-f.
AffineTensor tensor_inverse(const AffineTensor& t);
/// Identity arrow at a multiplicative tensor; StructureError otherwise.
AffineTensor tensor_unit(const Groupoid& g, const TensorField& lambda, const CheckOptions& options = {});
/// f -> ->f - <-f, the differential of the 2-term complex.
TensorField chain_map(const Groupoid& g, const AlgebroidSection& f);

/// <-(u (x) beta) = <-u (x) s^* beta and ->(u (x) beta) = ->u (x) t^* beta.
Verdict fleft_check(const Groupoid& g, const MultiVectorField& u, const DifferentialForm& beta,
                    const CheckOptions& options = {});

/// Section of A (x) T*M from a rank x dim_M matrix over the base, and back.
AlgebroidSection section_from_matrix(const Groupoid& g, const PMatrix& n);
PMatrix section_matrix(const AlgebroidSection& n);

/// N|_M in the splitting frame TM (+) A.
struct UnitBlocks {
  PMatrix n_TM;         // dim_M x dim_M
  PMatrix upper_right;  // dim_M x rank, zero for affine N
  PMatrix n;            // rank x dim_M
  PMatrix n_A;          // rank x rank
};
UnitBlocks unit_blocks(const Groupoid& g, const PMatrix& big_n);

/// An affine (1,1)-tensor held as a dim_G x dim_G matrix acting on tangent
/// vectors; the function on Gamma is (X, xi) -> xi(N X).
class Affine11 {
 public:
  /// Throws StructureError unless N is affine with vanishing upper-right
  /// unit block.
  Affine11(const Groupoid& g, PMatrix big_n, const CheckOptions& options = {});
  static Affine11 trusted(const Groupoid& g, PMatrix big_n);
  static Affine11 identity(const Groupoid& g);

  const Groupoid& groupoid() const { return tensor_.groupoid(); }
  const PMatrix& matrix() const { return matrix_; }
  const AffineTensor& tensor() const { return tensor_; }
  const UnitBlocks& blocks() const { return blocks_; }

  PMatrix source() const;
  PMatrix target() const;

 private:
  Affine11(AffineTensor t, PMatrix big_n, UnitBlocks blocks);

  AffineTensor tensor_;
  PMatrix matrix_;
  UnitBlocks blocks_;
};

/// Matrix product N N'.
Affine11 t11_compose(const Affine11& a, const Affine11& b);
/// N1 * N3 in the 2-vector space; ComposabilityError unless (N1)_r = (N3)_l.
Affine11 t11_multiply(const Affine11& a, const Affine11& b, const CheckOptions& options = {});

/// (N N')_r = N_r N'_r, (N N')_l = N_l N'_l and
/// n(N N') = n_A n' + n n'_TM + n rho n' where n_A is the A block of N_r at
/// the units. With n_A taken from N|_M instead the n rho n' term drops out;
/// both forms are checked.
Verdict hor1_check(const Affine11& a, const Affine11& b, const CheckOptions& options = {});

/// (N1 * N3)(N2 * N4) = (N1 N2) * (N3 N4), plus the unit laws I N = N = N I
/// and 1_x 1_y = 1_{xy} at x = (N1)_r, y = (N2)_r. Requires (N1)_r = (N3)_l
/// and (N2)_r = (N4)_l (ComposabilityError).
Verdict monoidal_interchange_check(const Affine11& n1, const Affine11& n2, const Affine11& n3, const Affine11& n4,
                                   const CheckOptions& options = {});

/// Matrix of X -> Pi^#(Theta^b X) with Theta^b X = i_X Theta and
/// Pi^#(xi) = i_xi Pi. DegreeError unless both have degree 2.
PMatrix pi_theta_matrix(const MultiVectorField& pi, const DifferentialForm& theta);

struct PiThetaReport {
  Affine11 product;
  /// n(Pi Theta) = pi_{A*} theta + pi theta_TM + pi rho^* theta, where
  /// theta_TM is the A* (x) T*M block of Theta_r at the units.
  Verdict component;
  /// (Pi Theta)_r = Pi_r Theta_r and (Pi Theta)_l = Pi_l Theta_l.
  Verdict translations;
  /// The Gamma identity for the product.
  Verdict affine;
};
PiThetaReport pi_compose_theta(const AffineMV& p, const AffineForm& t, const CheckOptions& options = {});

struct GroupCase {
  std::string label;
  bool expect_affine = false;
  bool expect_multiplicative = false;
  bool affine = false;
  bool multiplicative = false;
};

struct GroupCasesReport {
  std::vector<GroupCase> cases;
  Verdict verdict;
};

/// Ad_g = d(conj_g) at the unit, for a group (dim_M = 0).
PMatrix adjoint_matrix(const Groupoid& group);
bool ad_equivariant(const Groupoid& group, const PMatrix& l);
/// R L R^{-1}: the right-invariant extension of L in End(g) to the group.
PMatrix right_extension(const Groupoid& group, const QMatrix& l);

/// With pair_dim = 0: on the group, a family of constant endomorphisms L of
/// the Lie algebra, right-translated to G, is affine exactly when L is
/// Ad-equivariant. With pair_dim = n: on Pair(R^n) x group, the block tensor
/// diag(N1(x), N2(y), L) is affine for Ad-equivariant L and multiplicative
/// only when in addition N1 = N2.
GroupCasesReport group_cases_check(const GroupoidData& group, std::size_t pair_dim, const CheckOptions& options = {});

}  // namespace affinoid
