#pragma once

#include <functional>
#include <span>
#include <vector>

#include "affinoid/exact/matrix.hpp"
#include "affinoid/exterior/alternating.hpp"

namespace affinoid {

/// Section of wedge^p E (x) wedge^q F* for trivial bundles E, F with
/// `contra_dim` and `cov_dim` generators, coefficients in `num_vars`
/// variables. On a coordinate space both dimensions equal num_vars; an
/// algebroid section uses contra_dim = rank A and cov_dim = dim M.
class TensorField {
 public:
  TensorField() = default;
  TensorField(std::size_t contra_dim, std::size_t cov_dim, std::size_t num_vars, std::size_t p, std::size_t q);
  /// (p,q)-tensor on an n-dimensional coordinate space.
  TensorField(std::size_t n, std::size_t p, std::size_t q) : TensorField(n, n, n, p, q) {}

  static TensorField from_multivector(const MultiVectorField& m);
  /// (p,0)-tensor whose (unused) covariant side has cov_dim generators.
  static TensorField from_multivector(const MultiVectorField& m, std::size_t cov_dim);
  static TensorField from_form(const DifferentialForm& w);
  /// (1,1)-tensor with F(xi; X) = xi(N X); N is square over num_vars variables.
  static TensorField from_matrix(const PMatrix& n);
  static TensorField product(const MultiVectorField& m, const DifferentialForm& w);

  std::size_t contra_dim() const { return contra_dim_; }
  std::size_t cov_dim() const { return cov_dim_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t p() const { return p_; }
  std::size_t q() const { return q_; }

  const std::vector<Poly>& coeffs() const { return coeffs_; }
  std::vector<Subset> contra_sets() const { return k_subsets(contra_dim_, p_); }
  std::vector<Subset> cov_sets() const { return k_subsets(cov_dim_, q_); }

  const Poly& at(Subset contra, Subset cov) const { return coeffs_[index(contra, cov)]; }
  Poly& at(Subset contra, Subset cov) { return coeffs_[index(contra, cov)]; }

  MultiVectorField to_multivector() const;  // requires q = 0
  DifferentialForm to_form() const;         // requires p = 0
  PMatrix to_matrix() const;                // requires (1,1)

  /// The contravariant part with a fixed covariant index set.
  MultiVectorField contra_slice(Subset cov) const;
  void set_contra_slice(Subset cov, const MultiVectorField& m);

  bool is_zero() const;
  TensorField map(const std::function<Poly(const Poly&)>& fn, std::size_t new_num_vars) const;

  /// Full contraction with q vectors and p covectors at a point.
  Rational evaluate(std::span<const Rational> point, const std::vector<std::vector<Rational>>& vectors,
                    const std::vector<std::vector<Rational>>& covectors) const;

  TensorField& operator+=(const TensorField& o);
  TensorField& operator-=(const TensorField& o);
  TensorField& operator*=(const Poly& f);
  TensorField& operator*=(const Rational& c);

  friend TensorField operator+(TensorField a, const TensorField& b) { return a += b; }
  friend TensorField operator-(TensorField a, const TensorField& b) { return a -= b; }
  friend TensorField operator-(TensorField a) { return a *= Rational(-1); }
  friend TensorField operator*(const Poly& f, TensorField a) { return a *= f; }
  friend TensorField operator*(const Rational& c, TensorField a) { return a *= c; }
  friend bool operator==(const TensorField&, const TensorField&) = default;

 private:
  std::size_t index(Subset contra, Subset cov) const;
  void check_shape(const TensorField& o) const;

  std::size_t contra_dim_ = 0;
  std::size_t cov_dim_ = 0;
  std::size_t num_vars_ = 0;
  std::size_t p_ = 0;
  std::size_t q_ = 0;
  std::vector<Poly> coeffs_{Poly(0)};
};

}  // namespace affinoid
