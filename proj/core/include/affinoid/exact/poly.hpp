#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affinoid/exact/rational.hpp"

namespace affinoid {

inline constexpr std::size_t kMaxVariables = 32;

/// Exponent vector of a monomial. Ordered graded-lexicographically with
/// x1 > x2 > ... > xn.
class Monomial {
 public:
  Monomial() = default;

  static Monomial variable(std::size_t index);

  unsigned operator[](std::size_t var) const { return exps_[var]; }
  void set(std::size_t var, unsigned exponent);
  unsigned degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }

  /// Highest variable index with a nonzero exponent, plus one.
  std::size_t support_end() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint16_t degree_ = 0;
};

/// Multivariate polynomial over the rationals in canonical form: terms are
/// sorted by ascending graded-lex order and no stored coefficient is zero.
class Poly {
 public:
  struct Term {
    Monomial monomial;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
  };

  explicit Poly(std::size_t num_vars = 0);
  Poly(std::size_t num_vars, std::vector<Term> terms);  // canonicalizes

  static Poly constant(std::size_t num_vars, const Rational& c);
  static Poly variable(std::size_t num_vars, std::size_t index);
  static Poly monomial(std::size_t num_vars, const Monomial& m, const Rational& c = 1);

  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the monomial 1.
  Rational constant_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Total degree; 0 for the zero polynomial.
  unsigned degree() const;

  Poly derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces x_i by values[i]. Every value must have `target_vars` variables.
  Poly substitute(std::span<const Poly> values, std::size_t target_vars) const;
  /// Reinterprets the polynomial in `target_vars` variables with x_i -> x_{i+offset}.
  Poly embed(std::size_t target_vars, std::size_t offset = 0) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void check_same_arity(const Poly& other, const char* op) const;

  std::size_t num_vars_;
  std::vector<Term> terms_;
};

/// Canonical text form: terms in descending graded-lex order joined by " + ",
/// each printed as `c * x1^e1 * x2 * ...` (exponent 1 omitted, coefficient
/// always present). The zero polynomial prints as "0".
std::string to_string(const Poly& p);

/// Accepts the canonical form plus common relaxations: "-" between terms,
/// omitted coefficients, repeated variables, parentheses-free products.
/// Variables are x1..xn; an index above `num_vars` is a ParseError.
Poly parse_poly(std::string_view text, std::size_t num_vars);

}  // namespace affinoid
