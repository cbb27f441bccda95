#include "affinoid/exact/poly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "affinoid/errors.hpp"

namespace affinoid {

Monomial Monomial::variable(std::size_t index) {
  Monomial m;
  m.set(index, 1);
  return m;
}

void Monomial::set(std::size_t var, unsigned exponent) {
  if (var >= kMaxVariables) throw ArityError("variable index exceeds kMaxVariables");
  if (exponent > std::numeric_limits<std::uint8_t>::max()) throw ArityError("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[var] + exponent);
  exps_[var] = static_cast<std::uint8_t>(exponent);
}

std::size_t Monomial::support_end() const {
  for (std::size_t i = kMaxVariables; i > 0; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned e = unsigned{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<std::uint8_t>::max()) throw ArityError("exponent overflow");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
  return m;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
  // Same degree: the monomial with the larger exponent on the first differing
  // variable is larger.
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a.exps_[i] != b.exps_[i]) return a.exps_[i] <=> b.exps_[i];
  }
  return std::strong_ordering::equal;
}

namespace {

void canonicalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Poly::Term& a, const Poly::Term& b) { return a.monomial < b.monomial; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Poly::Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].monomial == acc.monomial; ++j) acc.coeff += terms[j].coeff;
    if (acc.coeff != 0) terms[out++] = std::move(acc);
    i = j;
  }
  terms.resize(out);
}

}  // namespace

Poly::Poly(std::size_t num_vars) : num_vars_(num_vars) {
  if (num_vars > kMaxVariables) throw ArityError("too many variables");
}

Poly::Poly(std::size_t num_vars, std::vector<Term> terms) : Poly(num_vars) {
  for (const auto& t : terms) {
    if (t.monomial.support_end() > num_vars) throw ArityError("monomial uses a variable beyond num_vars");
  }
  terms_ = std::move(terms);
  canonicalize(terms_);
}

Poly Poly::constant(std::size_t num_vars, const Rational& c) {
  Poly p(num_vars);
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

Poly Poly::variable(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw ArityError("variable index out of range");
  Poly p(num_vars);
  p.terms_.push_back({Monomial::variable(index), Rational(1)});
  return p;
}

Poly Poly::monomial(std::size_t num_vars, const Monomial& m, const Rational& c) {
  if (m.support_end() > num_vars) throw ArityError("monomial uses a variable beyond num_vars");
  Poly p(num_vars);
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.front().monomial.is_one()) return terms_.front().coeff;
  return 0;
}

Rational Poly::coefficient(const Monomial& m) const {
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& key) { return t.monomial < key; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

unsigned Poly::degree() const { return terms_.empty() ? 0 : terms_.back().monomial.degree(); }

Poly Poly::derivative(std::size_t var) const {
  if (var >= num_vars_) throw ArityError("derivative variable out of range");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const unsigned e = t.monomial[var];
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set(var, e - 1);
    out.push_back({m, t.coeff * e});
  }
  return Poly(num_vars_, std::move(out));
}

Rational Poly::evaluate(std::span<const Rational> point) const {
  if (point.size() != num_vars_) throw ArityError("evaluation point has wrong arity");
  std::vector<std::vector<Rational>> powers(num_vars_, std::vector<Rational>{Rational(1)});
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    total += v;
  }
  return total;
}

Poly Poly::substitute(std::span<const Poly> values, std::size_t target_vars) const {
  if (values.size() != num_vars_) throw ArityError("substitution has wrong arity");
  for (const auto& v : values) {
    if (v.num_vars() != target_vars) throw ArityError("substituted polynomial has wrong arity");
  }
  std::vector<std::vector<Poly>> powers(num_vars_);
  for (std::size_t i = 0; i < num_vars_; ++i) powers[i].push_back(Poly::constant(target_vars, 1));
  Poly total(target_vars);
  for (const auto& t : terms_) {
    Poly v = Poly::constant(target_vars, t.coeff);
    for (std::size_t i = 0; i < num_vars_; ++i) {
      const unsigned e = t.monomial[i];
      if (e == 0) continue;
      auto& pw = powers[i];
      while (pw.size() <= e) pw.push_back(pw.back() * values[i]);
      v *= pw[e];
    }
    total += v;
  }
  return total;
}

Poly Poly::embed(std::size_t target_vars, std::size_t offset) const {
  if (num_vars_ + offset > target_vars) throw ArityError("embedding does not fit");
  Poly p(target_vars);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m;
    for (std::size_t i = 0; i < num_vars_; ++i) {
      if (t.monomial[i] != 0) m.set(i + offset, t.monomial[i]);
    }
    p.terms_.push_back({m, t.coeff});
  }
  // Shifting variables can change the relative lex order, so re-sort.
  canonicalize(p.terms_);
  return p;
}

void Poly::check_same_arity(const Poly& other, const char* op) const {
  if (num_vars_ != other.num_vars_) {
    throw ArityError(std::string("polynomial ") + op + " with mismatched variable counts");
  }
}

Poly& Poly::operator+=(const Poly& other) {
  check_same_arity(other, "add");
  if (other.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && a->monomial < b->monomial)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->monomial < a->monomial) {
      merged.push_back(*b++);
    } else {
      Rational c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  check_same_arity(other, "subtract");
  return *this += -other;
}

Poly operator-(Poly a) {
  for (auto& t : a.terms_) t.coeff = -t.coeff;
  return a;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same_arity(b, "multiply");
  std::vector<Poly::Term> out;
  out.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) out.push_back({s.monomial * t.monomial, s.coeff * t.coeff});
  }
  Poly p(a.num_vars_);
  canonicalize(out);
  p.terms_ = std::move(out);
  return p;
}

Poly& Poly::operator*=(const Poly& other) { return *this = *this * other; }

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

}  // namespace affinoid

// ---- text form -------------------------------------------------------------

namespace affinoid {

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& terms = p.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    if (!out.empty()) out += " + ";
    out += to_string(it->coeff);
    for (std::size_t v = 0; v < p.num_vars(); ++v) {
      const unsigned e = it->monomial[v];
      if (e == 0) continue;
      out += " * x" + std::to_string(v + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t num_vars) : s_(text), n_(num_vars) {}

  Poly parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    Poly result(n_);
    bool first = true;
    while (true) {
      skip_ws();
      int sign = 1;
      if (!first) {
        if (at_end()) break;
        if (peek() == '+') {
          ++pos_;
        } else if (peek() == '-') {
          ++pos_;
          sign = -1;
        } else {
          fail("expected '+' or '-'");
        }
      }
      first = false;
      Poly t = term();
      if (sign < 0) t = -t;
      result += t;
    }
    return result;
  }

 private:
  Poly term() {
    Poly acc = Poly::constant(n_, 1);
    skip_ws();
    while (!at_end() && (peek() == '-' || peek() == '+')) {
      if (peek() == '-') acc = -acc;
      ++pos_;
      skip_ws();
    }
    acc *= factor();
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() == '*') {
        ++pos_;
      } else if (peek() != 'x') {
        break;  // juxtaposition such as "2x1" is an implicit product
      }
      skip_ws();
      acc *= factor();
    }
    return acc;
  }

  Poly factor() {
    skip_ws();
    if (at_end()) fail("unexpected end of input");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string lit = digits();
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_ws();
        lit += "/" + digits();
      }
      return Poly::constant(n_, parse_rational(lit));
    }
    if (peek() == 'x') {
      ++pos_;
      const std::string idx = digits();
      const unsigned long v = std::stoul(idx);
      if (v == 0 || v > n_) fail("variable x" + idx + " out of range");
      unsigned long e = 1;
      skip_ws();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_ws();
        e = std::stoul(digits());
      }
      if (e > 255) fail("exponent too large");
      Monomial m;
      m.set(v - 1, static_cast<unsigned>(e));
      return Poly::monomial(n_, m);
    }
    fail(std::string("unexpected character '") + peek() + "'");
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + std::string(s_) + "' at offset " + std::to_string(pos_) + ": " +
                     what);
  }

  std::string_view s_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, std::size_t num_vars) { return PolyParser(text, num_vars).parse(); }

}  // namespace affinoid
