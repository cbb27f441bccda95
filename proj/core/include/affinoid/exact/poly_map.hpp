#pragma once

#include <span>
#include <vector>

#include "affinoid/exact/matrix.hpp"

namespace affinoid {

/// Polynomial map R^domain_dim -> R^codomain_dim.
class PolyMap {
 public:
  PolyMap() = default;
  PolyMap(std::size_t domain_dim, std::vector<Poly> components);

  static PolyMap identity(std::size_t n);
  /// x -> (x_offset, ..., x_{offset+count-1}) from R^n.
  static PolyMap projection(std::size_t n, std::size_t offset, std::size_t count);
  /// Constant map R^n -> R^values.size().
  static PolyMap constant(std::size_t n, const std::vector<Rational>& values);

  std::size_t domain_dim() const { return domain_dim_; }
  std::size_t codomain_dim() const { return components_.size(); }
  const std::vector<Poly>& components() const { return components_; }
  const Poly& operator[](std::size_t i) const { return components_[i]; }

  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  /// Substitutes this map's components into a polynomial on the codomain.
  Poly pull(const Poly& p) const;

  PMatrix jacobian() const;
  QMatrix jacobian_at(std::span<const Rational> point) const;

  /// Concatenates the components of two maps with a common domain.
  PolyMap concat(const PolyMap& other) const;

  friend bool operator==(const PolyMap&, const PolyMap&) = default;

 private:
  std::size_t domain_dim_ = 0;
  std::vector<Poly> components_;
};

/// f o g.
PolyMap compose(const PolyMap& f, const PolyMap& g);

}  // namespace affinoid
