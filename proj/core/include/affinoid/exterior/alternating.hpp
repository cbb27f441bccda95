#pragma once

#include <functional>
#include <span>
#include <vector>

#include "affinoid/errors.hpp"
#include "affinoid/exact/poly.hpp"
#include "affinoid/exact/subsets.hpp"

namespace affinoid {

enum class Variance { contravariant, covariant };

/// Section of the k-th exterior power of a trivial bundle with `generators`
/// basis elements (d/dx_i or dx_i), coefficients polynomial in `num_vars`
/// variables. Coefficients are stored densely over the k-subsets of the
/// generators in colex order; antisymmetry is implicit.
template <Variance V>
class AlternatingField {
 public:
  AlternatingField() = default;
  AlternatingField(std::size_t generators, std::size_t num_vars, std::size_t degree)
      : generators_(generators), num_vars_(num_vars), degree_(degree) {
    // Degrees above the generator count are allowed and always zero.
    coeffs_.assign(binomial(generators, degree), Poly(num_vars));
  }
  /// Field on a coordinate space: generators = coordinates.
  AlternatingField(std::size_t dim, std::size_t degree) : AlternatingField(dim, dim, degree) {}

  static AlternatingField function(std::size_t generators, const Poly& f) {
    AlternatingField a(generators, f.num_vars(), 0);
    a.coeffs_[0] = f;
    return a;
  }
  static AlternatingField basis(std::size_t dim, Subset s, const Poly& coeff) {
    AlternatingField a(dim, coeff.num_vars(), static_cast<std::size_t>(subset_size(s)));
    a[s] = coeff;
    return a;
  }

  std::size_t generators() const { return generators_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t degree() const { return degree_; }

  const std::vector<Poly>& coeffs() const { return coeffs_; }
  std::vector<Subset> index_sets() const { return k_subsets(generators_, degree_); }

  const Poly& operator[](Subset s) const { return coeffs_[index(s)]; }
  Poly& operator[](Subset s) { return coeffs_[index(s)]; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (!c.is_zero()) return false;
    return true;
  }

  /// Applies `fn` to every coefficient; the result may live in a different
  /// number of variables.
  AlternatingField map(const std::function<Poly(const Poly&)>& fn, std::size_t new_num_vars) const {
    AlternatingField out(generators_, new_num_vars, degree_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out.coeffs_[i] = fn(coeffs_[i]);
      if (out.coeffs_[i].num_vars() != new_num_vars) throw ArityError("coefficient map changed arity");
    }
    return out;
  }

  std::vector<Rational> evaluate(std::span<const Rational> point) const {
    std::vector<Rational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(c.evaluate(point));
    return out;
  }

  AlternatingField& operator+=(const AlternatingField& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
  }
  AlternatingField& operator-=(const AlternatingField& o) {
    check_shape(o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
  }
  AlternatingField& operator*=(const Poly& f) {
    for (auto& c : coeffs_) c *= f;
    return *this;
  }
  AlternatingField& operator*=(const Rational& c) {
    for (auto& p : coeffs_) p *= c;
    return *this;
  }

  friend AlternatingField operator+(AlternatingField a, const AlternatingField& b) { return a += b; }
  friend AlternatingField operator-(AlternatingField a, const AlternatingField& b) { return a -= b; }
  friend AlternatingField operator-(AlternatingField a) { return a *= Rational(-1); }
  friend AlternatingField operator*(const Poly& f, AlternatingField a) { return a *= f; }
  friend AlternatingField operator*(const Rational& c, AlternatingField a) { return a *= c; }
  friend bool operator==(const AlternatingField&, const AlternatingField&) = default;

 private:
  std::size_t index(Subset s) const {
    if (static_cast<std::size_t>(subset_size(s)) != degree_ || (generators_ < 32 && (s >> generators_) != 0)) {
      throw ArityError("index set does not match the field's degree or generator count");
    }
    return subset_rank(s);
  }
  void check_shape(const AlternatingField& o) const {
    if (generators_ != o.generators_ || num_vars_ != o.num_vars_ || degree_ != o.degree_) {
      throw ArityError("alternating fields of different shape");
    }
  }

  std::size_t generators_ = 0;
  std::size_t num_vars_ = 0;
  std::size_t degree_ = 0;
  std::vector<Poly> coeffs_{Poly(0)};
};

using MultiVectorField = AlternatingField<Variance::contravariant>;
using DifferentialForm = AlternatingField<Variance::covariant>;

}  // namespace affinoid
