#pragma once

#include <vector>

#include "affinoid/groupoid/algebroid.hpp"

namespace affinoid {

/// theta = i^* Theta, the restriction of a form on G to the units.
DifferentialForm unit_restriction(const Groupoid& g, const DifferentialForm& big_theta);

/// m^* Theta = pr1^* Theta + pr2^* Theta on the composable-pair space.
Verdict multiplicative_form_identity(const Groupoid& g, const DifferentialForm& big_theta,
                                     const CheckOptions& options = {});
/// m^* Theta = pr1^* Theta + pr2^* Theta - pr1^* s^* theta.
Verdict affine_form_identity(const Groupoid& g, const DifferentialForm& big_theta, const CheckOptions& options = {});
/// The same condition written with pr2^* t^* theta.
Verdict affine_form_identity_target(const Groupoid& g, const DifferentialForm& big_theta,
                                    const CheckOptions& options = {});
/// Pullback of Theta - Theta - Theta + Theta to the parallelogram space
/// vanishes.
Verdict parallelogram_isotropy(const Groupoid& g, const DifferentialForm& big_theta, const CheckOptions& options = {});

bool is_multiplicative_form(const Groupoid& g, const DifferentialForm& big_theta, const CheckOptions& options = {});
/// Both expressions of the affine condition are evaluated; a disagreement
/// throws StructureError.
bool is_affine_form(const Groupoid& g, const DifferentialForm& big_theta, const CheckOptions& options = {});

/// An affine k-form with theta = i^* Theta. The groupoid must outlive it.
class AffineForm {
 public:
  /// Throws StructureError unless the affine identity holds.
  AffineForm(const Groupoid& g, DifferentialForm big_theta, const CheckOptions& options = {});
  static AffineForm trusted(const Groupoid& g, DifferentialForm big_theta);

  const Groupoid& groupoid() const { return *g_; }
  const DifferentialForm& field() const { return field_; }
  const DifferentialForm& theta() const { return theta_; }
  std::size_t degree() const { return field_.degree(); }

  /// Theta_r = Theta - t^* theta.
  DifferentialForm source() const;
  /// Theta_l = Theta - s^* theta.
  DifferentialForm target() const;

  friend AffineForm operator+(const AffineForm& a, const AffineForm& b);
  friend AffineForm operator*(const Rational& c, const AffineForm& a);

 private:
  AffineForm(const Groupoid* g, DifferentialForm big_theta, DifferentialForm theta);

  const Groupoid* g_;
  DifferentialForm field_;
  DifferentialForm theta_;
};

struct FormSourceTarget {
  DifferentialForm source;
  DifferentialForm target;
};
FormSourceTarget form_source_target(const AffineForm& f);

/// Theta * Theta' = Theta + s^* theta'; requires s(Theta) = t(Theta').
AffineForm form_compose(const AffineForm& a, const AffineForm& b, const CheckOptions& options = {});
/// Theta^{-1} = Theta - s^* theta - t^* theta.
AffineForm form_inverse(const AffineForm& a);
AffineForm form_unit(const Groupoid& g, const DifferentialForm& lambda, const CheckOptions& options = {});

/// Phi(Theta) = (Theta - t^* theta, theta) and its inverse
/// (Lambda, lambda) -> Lambda + t^* lambda.
struct CochainPair {
  DifferentialForm multiplicative;
  DifferentialForm base;
};
CochainPair phi(const AffineForm& f);
DifferentialForm phi_inverse(const Groupoid& g, const CochainPair& pair);

/// On every form of the battery: it is affine, Phi^{-1} Phi = id,
/// Phi Phi^{-1} = id on cross pairs (Lambda_i, theta_j), d Theta is affine and
/// d Phi = Phi d.
Verdict cochain_iso_check(const Groupoid& g, const std::vector<DifferentialForm>& battery,
                          const CheckOptions& options = {});

/// An IM k-form: mu(e_a) in Omega^{k-1}(M) and nu(e_a) in Omega^k(M) on the
/// frame sections, extended C^infty(M)-linearly.
struct IMForm {
  LieAlgebroidData algebroid;
  std::size_t degree = 0;
  std::vector<DifferentialForm> mu;
  std::vector<DifferentialForm> nu;

  DifferentialForm mu_of(const MultiVectorField& section) const;
  DifferentialForm nu_of(const MultiVectorField& section) const;
};

/// The three IM equations on frame sections and on their multiples by base
/// coordinates.
Verdict check_im_form(const IMForm& im, const CheckOptions& options = {});

struct IMExtraction {
  IMForm im;
  DifferentialForm theta;
};

/// mu(e_a) = i^*(i_{->e_a} Theta_r), nu(e_a) = i^*(i_{->e_a} d Theta_r).
/// Throws StructureError if the IM equations fail and DegreeError for k = 0.
IMExtraction im_form_extract(const AffineForm& f, const CheckOptions& options = {});

enum class FormClass { affine, multiplicative };

/// Basis of the k-forms on G with coefficients of total degree <= max_degree
/// that satisfy the affine (or multiplicative) identity, found as the kernel
/// of the linear residual map.
std::vector<DifferentialForm> form_space(const Groupoid& g, std::size_t k, unsigned max_degree, FormClass kind);

}  // namespace affinoid
