#pragma once

#include <string>
#include <vector>

#include "affinoid/exact/linsolve.hpp"
#include "affinoid/exact/poly_map.hpp"

namespace affinoid {

/// Raw description of a polynomial Lie groupoid G => M, as read from JSON.
///
/// `comp_param` maps a coordinate space P onto the composable pairs G^(2) in
/// G x G and `mult` gives the product on P. `splitting` is a dim_G x dim_G
/// matrix in the base variables whose first dim_M columns are the unit
/// embedded TM and whose remaining columns frame A = ker ds along the units.
struct GroupoidData {
  std::string name;
  std::size_t dim_G = 0;
  std::size_t dim_M = 0;
  PolyMap src;
  PolyMap tgt;
  PolyMap unit;
  PolyMap inv;
  PolyMap comp_param;
  PolyMap mult;
  PMatrix splitting;
};

/// A validated polynomial groupoid with the derived data every other module
/// needs: the product extended to all of G x G, both invariant frames of A,
/// the composable-triple parametrization, and cached exterior powers.
///
/// Construction requires `comp_param` to be affine-linear and injective and
/// the splitting to have constant nonzero determinant; it does not check the
/// groupoid axioms (see validate_axioms).
class Groupoid {
 public:
  explicit Groupoid(GroupoidData data);

  const GroupoidData& data() const { return data_; }
  const std::string& name() const { return data_.name; }
  std::size_t dim_G() const { return data_.dim_G; }
  std::size_t dim_M() const { return data_.dim_M; }
  std::size_t rank() const { return data_.dim_G - data_.dim_M; }
  std::size_t dim_P() const { return data_.comp_param.domain_dim(); }
  std::size_t dim_Q() const { return triples_.domain_dim(); }

  const PolyMap& src() const { return data_.src; }
  const PolyMap& tgt() const { return data_.tgt; }
  const PolyMap& unit() const { return data_.unit; }
  const PolyMap& inv() const { return data_.inv; }
  const PolyMap& comp_param() const { return data_.comp_param; }
  const PolyMap& mult() const { return data_.mult; }

  /// P -> G, the first and second factor of a composable pair.
  const PolyMap& first() const { return first_; }
  const PolyMap& second() const { return second_; }

  /// The product as a map G x G -> G: mult composed with the left inverse of
  /// comp_param. Agrees with the groupoid product on composable pairs.
  const PolyMap& product() const { return product_; }
  /// G x G -> P, left inverse of comp_param.
  const PolyMap& pair_coordinates() const { return pair_coords_; }

  /// Q -> P x P parametrizing composable triples (a, b, c) as pairs
  /// ((a, b), (b, c)).
  const PolyMap& triples() const { return triples_; }

  /// P -> G^3, p -> (g, h, gh): the graph of the multiplication.
  const PolyMap& triangles() const { return triangles_; }
  /// Q -> G^4, (a, b, c) -> (b, ab, bc, abc), a parametrization of the
  /// parallelograms {(g, h, l, h g^-1 l) : s(g) = s(h), t(g) = t(l)}.
  const PolyMap& parallelograms() const { return parallelograms_; }

  /// dim_G x dim_G splitting matrix (base variables) and its inverse.
  const PMatrix& splitting() const { return data_.splitting; }
  const PMatrix& splitting_inverse() const { return splitting_inv_; }
  /// The A block (last rank columns) of the splitting.
  PMatrix splitting_A() const;

  /// dim_G x rank matrices over G: column a is the right (resp. left)
  /// translation of the frame section e_a, with the sign convention
  /// left(u)(g) = -dL_g dinv(u_{s(g)}).
  const PMatrix& right_frame() const { return right_frame_; }
  const PMatrix& left_frame() const { return left_frame_; }

  /// Exterior powers used by translations and restrictions.
  const PMatrix& right_frame_power(std::size_t p) const { return right_frame_pow_.at(p); }
  const PMatrix& left_frame_power(std::size_t p) const { return left_frame_pow_.at(p); }
  const PMatrix& target_jacobian_power(std::size_t q) const { return tgt_jac_pow_.at(q); }
  const PMatrix& source_jacobian_power(std::size_t q) const { return src_jac_pow_.at(q); }
  const PMatrix& splitting_power(std::size_t k) const { return splitting_pow_.at(k); }
  const PMatrix& splitting_inverse_power(std::size_t k) const { return splitting_inv_pow_.at(k); }

  // ---- pointwise structure -------------------------------------------------

  bool composable(const std::vector<Rational>& g, const std::vector<Rational>& h) const;
  /// Throws ComposabilityError for a non-composable pair.
  std::vector<Rational> multiply(const std::vector<Rational>& g, const std::vector<Rational>& h) const;

 private:
  GroupoidData data_;
  PolyMap first_, second_;
  PolyMap product_;
  PolyMap pair_coords_;
  PolyMap triples_;
  PolyMap triangles_;
  PolyMap parallelograms_;
  PMatrix splitting_inv_;
  PMatrix right_frame_, left_frame_;
  std::vector<PMatrix> right_frame_pow_, left_frame_pow_, tgt_jac_pow_, src_jac_pow_, splitting_pow_,
      splitting_inv_pow_;
};

/// Result of validate_axioms: empty `violations` means every identity holds.
struct AxiomReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks the groupoid axioms as exact polynomial identities on G, on the
/// composable-pair space P and on the composable-triple space Q, plus the
/// splitting conditions at the units.
AxiomReport validate_axioms(const Groupoid& g);

}  // namespace affinoid
