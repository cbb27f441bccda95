#include "affinoid/exact/sampling.hpp"

#include <algorithm>

#include "affinoid/errors.hpp"

namespace affinoid {

std::string to_string(CheckMode mode) { return mode == CheckMode::exact ? "exact" : "sampled"; }

CheckMode parse_check_mode(const std::string& text) {
  if (text == "exact") return CheckMode::exact;
  if (text == "sampled") return CheckMode::sampled;
  throw ParseError("unknown check mode '" + text + "' (expected exact or sampled)");
}

Rational RationalSampler::next() {
  const auto num = static_cast<long>(engine_() % 7) - 3;
  const auto den = static_cast<long>(engine_() % 3) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> RationalSampler::point(std::size_t n) {
  std::vector<Rational> p;
  p.reserve(n);
  for (std::size_t i = 0; i < n; ++i) p.push_back(next());
  return p;
}

std::vector<Rational> find_witness(const Poly& a, const Poly& b, const CheckOptions& options) {
  const Poly diff = a - b;
  if (diff.is_zero()) return {};
  RationalSampler sampler(options.seed);
  const std::size_t count = std::max<std::size_t>(options.samples, diff.degree() + 1);
  for (std::size_t i = 0; i < count; ++i) {
    auto pt = sampler.point(diff.num_vars());
    if (diff.evaluate(pt) != 0) return pt;
  }
  return {};
}

bool polys_equal(const Poly& a, const Poly& b, const CheckOptions& options) {
  if (options.mode == CheckMode::exact) return a == b;
  if (a.num_vars() != b.num_vars()) throw ArityError("comparing polynomials of different arity");
  RationalSampler sampler(options.seed);
  const std::size_t count =
      std::max<std::size_t>(options.samples, std::max(a.degree(), b.degree()) + 1);
  for (std::size_t i = 0; i < count; ++i) {
    const auto pt = sampler.point(a.num_vars());
    if (a.evaluate(pt) != b.evaluate(pt)) return false;
  }
  return true;
}

}  // namespace affinoid
