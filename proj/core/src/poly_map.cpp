#include "affinoid/exact/poly_map.hpp"

namespace affinoid {

PolyMap::PolyMap(std::size_t domain_dim, std::vector<Poly> components)
    : domain_dim_(domain_dim), components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.num_vars() != domain_dim_) throw ArityError("PolyMap component has wrong variable count");
  }
}

PolyMap PolyMap::identity(std::size_t n) { return projection(n, 0, n); }

PolyMap PolyMap::projection(std::size_t n, std::size_t offset, std::size_t count) {
  if (offset + count > n) throw ArityError("projection out of range");
  std::vector<Poly> comps;
  for (std::size_t i = 0; i < count; ++i) comps.push_back(Poly::variable(n, offset + i));
  return PolyMap(n, std::move(comps));
}

PolyMap PolyMap::constant(std::size_t n, const std::vector<Rational>& values) {
  std::vector<Poly> comps;
  for (const auto& v : values) comps.push_back(Poly::constant(n, v));
  return PolyMap(n, std::move(comps));
}

std::vector<Rational> PolyMap::evaluate(std::span<const Rational> point) const {
  if (point.size() != domain_dim_) throw ArityError("PolyMap evaluated at a point of wrong arity");
  std::vector<Rational> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.evaluate(point));
  return out;
}

Poly PolyMap::pull(const Poly& p) const {
  if (p.num_vars() != codomain_dim()) throw ArityError("pullback of a polynomial on the wrong space");
  return p.substitute(components_, domain_dim_);
}

PMatrix PolyMap::jacobian() const {
  PMatrix j(codomain_dim(), domain_dim_, Poly(domain_dim_));
  for (std::size_t r = 0; r < codomain_dim(); ++r)
    for (std::size_t c = 0; c < domain_dim_; ++c) j(r, c) = components_[r].derivative(c);
  return j;
}

QMatrix PolyMap::jacobian_at(std::span<const Rational> point) const {
  if (point.size() != domain_dim_) throw ArityError("jacobian evaluated at a point of wrong arity");
  return affinoid::evaluate(jacobian(), point);
}

PolyMap PolyMap::concat(const PolyMap& other) const {
  if (other.domain_dim_ != domain_dim_) throw ArityError("concat of maps with different domains");
  auto comps = components_;
  comps.insert(comps.end(), other.components_.begin(), other.components_.end());
  return PolyMap(domain_dim_, std::move(comps));
}

PolyMap compose(const PolyMap& f, const PolyMap& g) {
  if (g.codomain_dim() != f.domain_dim()) throw ArityError("compose: codomain/domain mismatch");
  std::vector<Poly> comps;
  comps.reserve(f.codomain_dim());
  for (const auto& c : f.components()) comps.push_back(c.substitute(g.components(), g.domain_dim()));
  return PolyMap(g.domain_dim(), std::move(comps));
}

}  // namespace affinoid
