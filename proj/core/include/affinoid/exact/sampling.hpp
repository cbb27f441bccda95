#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "affinoid/exact/poly.hpp"

namespace affinoid {

enum class CheckMode { exact, sampled };

std::string to_string(CheckMode mode);
CheckMode parse_check_mode(const std::string& text);

/// How identity checks are decided. Exact expands and compares canonical
/// forms; sampled evaluates at seeded random rational points.
struct CheckOptions {
  CheckMode mode = CheckMode::exact;
  std::uint64_t seed = 1;
  std::size_t samples = 25;
};

/// Seeded generator of small rationals p/q with |p| <= 3 and 1 <= q <= 3.
/// Uses plain modulo reduction of mt19937_64 output so the stream is the same
/// on every standard library.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  Rational next();
  std::vector<Rational> point(std::size_t n);

 private:
  std::mt19937_64 engine_;
};

/// Decides a == b. In sampled mode the number of points is at least
/// max(options.samples, total degree + 1).
bool polys_equal(const Poly& a, const Poly& b, const CheckOptions& options);

/// First sampled point where a != b, if any; empty when none was found.
std::vector<Rational> find_witness(const Poly& a, const Poly& b, const CheckOptions& options);

}  // namespace affinoid
