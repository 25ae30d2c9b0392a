#ifndef SECANTLAB_POLYNOMIAL_HPP
#define SECANTLAB_POLYNOMIAL_HPP

#include <algorithm>
#include <cctype>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secantlab/ring.hpp"

namespace secantlab {

struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly descending under the ring order, no zero
/// coefficients. The zero polynomial has no terms.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  /// Builds from arbitrary (monomial, coefficient) pairs; sorts and combines.
  Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)), terms_(std::move(terms)) { normalize(); }

  static Polynomial constant(RingPtr ring, std::int64_t c) {
    Coeff v = ring->field().reduce(c);
    Polynomial f(ring);
    if (v) f.terms_.push_back({ring->one(), v});
    return f;
  }
  static Polynomial variable(RingPtr ring, std::size_t i) {
    Polynomial f(ring);
    f.terms_.push_back({ring->variable(i), 1});
    return f;
  }
  static Polynomial term(RingPtr ring, Monomial m, Coeff c) {
    Polynomial f(ring);
    if (c) f.terms_.push_back({std::move(m), c});
    return f;
  }

  /// Wraps terms already in canonical order (unchecked).
  static Polynomial from_sorted(RingPtr ring, std::vector<Term> terms) {
    Polynomial f(std::move(ring));
    f.terms_ = std::move(terms);
    return f;
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::vector<Term>& mutable_terms() noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  const Term& leading() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  unsigned total_degree() const noexcept {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }
  unsigned min_degree() const noexcept {
    unsigned d = ~0u;
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }
  long max_weighted_degree() const noexcept {
    long d = 0;
    for (const auto& t : terms_) d = std::max(d, ring_->weighted_degree(t.mono));
    return d;
  }
  bool is_homogeneous() const noexcept {
    for (const auto& t : terms_)
      if (ring_->weighted_degree(t.mono) != ring_->weighted_degree(terms_.front().mono)) return false;
    return true;
  }

  /// Scales so the leading coefficient is one.
  Polynomial monic() const {
    if (is_zero()) return *this;
    return scaled(ring_->field().inv(leading_coeff()));
  }
  Polynomial scaled(Coeff c) const {
    if (c == 0) return Polynomial(ring_);
    Polynomial r = *this;
    const auto& F = ring_->field();
    for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
    return r;
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.mono = t.mono * m;
    return r;
  }

  Coeff coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return 0;
  }

  Coeff evaluate(std::span<const Coeff> point) const {
    const auto& F = ring_->field();
    Coeff acc = 0;
    for (const auto& t : terms_) {
      Coeff v = t.coeff;
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i]) v = F.mul(v, F.pow(point[i], t.mono[i]));
      acc = F.add(acc, v);
    }
    return acc;
  }

  /// f + c * m * g, the reduction workhorse.
  Polynomial add_scaled(const Polynomial& g, Coeff c, const Monomial& m) const {
    const auto& F = ring_->field();
    const auto& ord = ring_->order();
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    bool unit = m.is_one();
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        out.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = unit ? g.terms_[j].mono : g.terms_[j].mono * m;
      if (i == terms_.size()) {
        out.push_back({gm, F.mul(c, g.terms_[j++].coeff)});
        continue;
      }
      auto cmp = ord.compare_unchecked(terms_[i].mono, gm);
      if (cmp > 0) {
        out.push_back(terms_[i++]);
      } else if (cmp < 0) {
        out.push_back({gm, F.mul(c, g.terms_[j++].coeff)});
      } else {
        Coeff s = F.add(terms_[i].coeff, F.mul(c, g.terms_[j].coeff));
        if (s) out.push_back({gm, s});
        ++i;
        ++j;
      }
    }
    return from_sorted(ring_, std::move(out));
  }

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    check_ring(f, g);
    return f.add_scaled(g, 1, f.ring_->one());
  }
  friend Polynomial operator-(const Polynomial& f, const Polynomial& g) {
    check_ring(f, g);
    return f.add_scaled(g, f.ring_->field().neg(1), f.ring_->one());
  }
  Polynomial operator-() const { return scaled(ring_->field().neg(1)); }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    check_ring(f, g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.ring_);
    const auto& F = f.ring_->field();
    std::unordered_map<Monomial, Coeff, MonomialHash> acc;
    acc.reserve(f.size() * g.size());
    for (const auto& a : f.terms_)
      for (const auto& b : g.terms_) {
        auto [it, fresh] = acc.try_emplace(a.mono * b.mono, 0);
        it->second = F.add(it->second, F.mul(a.coeff, b.coeff));
      }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c) terms.push_back({m, c});
    const auto& ord = f.ring_->order();
    std::sort(terms.begin(), terms.end(),
              [&](const Term& x, const Term& y) { return ord.greater(x.mono, y.mono); });
    return from_sorted(f.ring_, std::move(terms));
  }

  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
  Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, 1), b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Formal partial derivative.
  Polynomial derivative(std::size_t var) const {
    const auto& F = ring_->field();
    std::vector<Term> out;
    for (const auto& t : terms_) {
      unsigned e = t.mono[var];
      if (!e) continue;
      Coeff c = F.mul(t.coeff, F.reduce(e));
      if (!c) continue;
      Monomial m = t.mono;
      m.set(var, e - 1);
      out.push_back({m, c});
    }
    return Polynomial(ring_, std::move(out));
  }

  /// Re-expresses in `target`, sending variable i to variable var_map[i].
  Polynomial map_variables(const RingPtr& target, std::span<const std::size_t> var_map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m(target->nvars());
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        if (t.mono[i]) m.set(var_map[i], m[var_map[i]] + t.mono[i]);
      out.push_back({m, t.coeff});
    }
    return Polynomial(target, std::move(out));
  }

  /// Same variables, re-sorted for another ring sharing names and field.
  Polynomial in_ring(const RingPtr& target) const {
    if (target == ring_) return *this;
    if (target->nvars() != ring_->nvars() || !(target->field() == ring_->field())) throw RingMismatch();
    return Polynomial(target, terms_);
  }

  /// Substitutes images[i] for variable i; all images share one target ring.
  Polynomial substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != ring_->nvars()) throw InvalidArgument("substitution arity mismatch");
    RingPtr target = images.front().ring();
    Polynomial acc(target);
    std::vector<std::vector<Polynomial>> powers(images.size());
    for (const auto& t : terms_) {
      Polynomial prod = constant(target, t.coeff);
      for (std::size_t i = 0; i < t.mono.size(); ++i) {
        unsigned e = t.mono[i];
        if (!e) continue;
        auto& pw = powers[i];
        if (pw.empty()) pw.push_back(constant(target, 1));
        while (pw.size() <= e) pw.push_back(pw.back() * images[i]);
        prod *= pw[e];
      }
      acc += prod;
    }
    return acc;
  }

  std::string to_string() const;

  friend bool operator==(const Polynomial& f, const Polynomial& g) {
    return f.terms_ == g.terms_ && (f.ring_ == g.ring_ || (f.ring_ && g.ring_ && *f.ring_ == *g.ring_));
  }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << f.to_string(); }

private:
  static void check_ring(const Polynomial& f, const Polynomial& g) {
    if (f.ring_ != g.ring_ && !(f.ring_ && g.ring_ && *f.ring_ == *g.ring_)) throw RingMismatch();
  }

  void normalize() {
    const auto& ord = ring_->order();
    const auto& F = ring_->field();
    std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) { return ord.greater(x.mono, y.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = F.add(out.back().coeff, t.coeff);
      else
        out.push_back(t);
      if (out.back().coeff == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Common weighted degree under the ring grading, or nullopt when f is not
/// weighted-homogeneous.
inline std::optional<long> weighted_degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial();
  if (!f.is_homogeneous()) return std::nullopt;
  return f.ring()->weighted_degree(f.leading_monomial());
}

inline std::string monomial_to_string(const Monomial& m, const PolyRing& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += '*';
    s += ring.name(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& F = ring_->field();
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    std::int64_t c = F.lift(terms_[k].coeff);
    bool neg = c < 0;
    if (neg) c = -c;
    if (k == 0)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    const Monomial& m = terms_[k].mono;
    if (m.is_one()) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += monomial_to_string(m, *ring_);
    }
  }
  return s;
}

namespace detail {

class PolyParser {
public:
  PolyParser(std::string_view text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip();
    bool first = true;
    while (true) {
      Coeff sign = 1;
      if (peek() == '+' || peek() == '-') {
        if (peek() == '-') sign = ring_->field().neg(1);
        ++pos_;
        skip();
      } else if (!first) {
        break;
      }
      first = false;
      Term t = parse_term();
      t.coeff = ring_->field().mul(t.coeff, sign);
      terms.push_back(t);
      skip();
    }
    if (pos_ != s_.size()) throw ParseError(pos_, std::string("unexpected character '") + s_[pos_] + "'");
    return Polynomial(ring_, std::move(terms));
  }

private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  std::uint64_t parse_nat() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    const std::uint64_t p = ring_->field().characteristic();
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = (v * 10 + static_cast<std::uint64_t>(peek() - '0')) % p;
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected a natural number");
    return v;
  }

  std::uint64_t parse_exponent() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > kMaxExponent) throw ParseError(start, "exponent too large");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected an exponent");
    return v;
  }

  Term parse_term() {
    skip();
    Term t{ring_->one(), 1};
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coeff = static_cast<Coeff>(parse_nat());
      any = true;
    }
    while (true) {
      skip();
      std::size_t save = pos_;
      if (peek() == '*') {
        ++pos_;
        skip();
        if (!std::isalpha(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a variable after '*'");
      }
      if (!std::isalpha(static_cast<unsigned char>(peek()))) {
        pos_ = save;
        break;
      }
      std::size_t start = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      auto idx = ring_->index_of(name);
      if (!idx) throw UnknownVariable(name);
      skip();
      unsigned e = 1;
      if (peek() == '^') {
        ++pos_;
        skip();
        e = static_cast<unsigned>(parse_exponent());
      }
      if (t.mono[*idx] + e > kMaxExponent) throw ParseError(start, "exponent too large");
      t.mono.set(*idx, t.mono[*idx] + e);
      any = true;
    }
    if (!any) throw ParseError(pos_, pos_ < s_.size() ? "expected a term" : "unexpected end of input");
    return t;
  }

  std::string_view s_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses `expr := term (('+'|'-') term)*`, `term := coeff? ('*'? var ('^' nat)?)*`.
/// A leading sign is accepted. Integer literals are reduced mod p.
inline Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  return detail::PolyParser(text, ring).parse();
}

inline Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

}  // namespace secantlab

#endif  // SECANTLAB_POLYNOMIAL_HPP
