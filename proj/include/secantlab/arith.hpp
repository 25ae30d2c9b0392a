#ifndef SECANTLAB_ARITH_HPP
#define SECANTLAB_ARITH_HPP

#include <cstdint>
#include <optional>
#include <ostream>

#include "secantlab/errors.hpp"

namespace secantlab {

using Coeff = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 32003;

/// Deterministic primality test; trial division is plenty below 2^31.
constexpr bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// The prime field F_p. Values handed to the raw operations must already be
/// canonical representatives in [0, p).
class PrimeField {
public:
  explicit PrimeField(std::uint64_t p = kDefaultPrime) : p_(static_cast<std::uint32_t>(p)) {
    if (p < 3 || p >= (1ULL << 31) || !is_prime(p)) throw NotPrime(p);
  }

  std::uint32_t characteristic() const noexcept { return p_; }

  Coeff add(Coeff a, Coeff b) const noexcept {
    Coeff s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Coeff sub(Coeff a, Coeff b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Coeff neg(Coeff a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Coeff mul(Coeff a, Coeff b) const noexcept {
    return static_cast<Coeff>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Coeff pow(Coeff a, std::uint64_t e) const noexcept {
    std::uint64_t r = 1, b = a;
    while (e) {
      if (e & 1) r = r * b % p_;
      b = b * b % p_;
      e >>= 1;
    }
    return static_cast<Coeff>(r);
  }
  Coeff inv(Coeff a) const {
    if (a == 0) throw DivisionByZero();
    // extended Euclid on signed 64-bit
    std::int64_t t = 0, nt = 1, r = p_, nr = a;
    while (nr) {
      std::int64_t q = r / nr;
      std::int64_t tmp = t - q * nt;
      t = nt;
      nt = tmp;
      tmp = r - q * nr;
      r = nr;
      nr = tmp;
    }
    return static_cast<Coeff>(t < 0 ? t + p_ : t);
  }

  /// Canonical representative of an arbitrary integer.
  Coeff reduce(std::int64_t v) const noexcept {
    std::int64_t m = v % static_cast<std::int64_t>(p_);
    return static_cast<Coeff>(m < 0 ? m + p_ : m);
  }

  /// Symmetric lift into (-p/2, p/2], used for printing.
  std::int64_t lift(Coeff a) const noexcept {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : static_cast<std::int64_t>(a);
  }

  /// Square root if a is a square. Uses the p = 3 mod 4 shortcut, otherwise Tonelli-Shanks.
  std::optional<Coeff> sqrt(Coeff a) const {
    if (a == 0) return Coeff{0};
    if (pow(a, (p_ - 1) / 2) != 1) return std::nullopt;
    if (p_ % 4 == 3) return pow(a, (p_ + 1) / 4);
    std::uint32_t q = p_ - 1, s = 0;
    while (q % 2 == 0) {
      q /= 2;
      ++s;
    }
    Coeff z = 2;
    while (pow(z, (p_ - 1) / 2) != p_ - 1) ++z;
    Coeff m = s, c = pow(z, q), t = pow(a, q), r = pow(a, (q + 1) / 2);
    while (t != 1) {
      Coeff i = 0, tt = t;
      while (tt != 1) {
        tt = mul(tt, tt);
        ++i;
      }
      Coeff b = c;
      for (Coeff j = 0; j + 1 < m - i; ++j) b = mul(b, b);
      m = i;
      c = mul(b, b);
      t = mul(t, c);
      r = mul(r, b);
    }
    return r;
  }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
  std::uint32_t p_;
};

/// A checked element of F_p carrying its field.
class FieldElement {
public:
  FieldElement(const PrimeField& field, std::int64_t v) : field_(field), value_(field.reduce(v)) {}

  Coeff value() const noexcept { return value_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement inv() const { return raw(field_.inv(value_)); }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.raw(a.field_.add(a.value_, b.value_));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.raw(a.field_.sub(a.value_, b.value_));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check(b);
    return a.raw(a.field_.mul(a.value_, b.value_));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inv(); }
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.value_ == b.value_;
  }
  friend std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.value_; }

private:
  FieldElement raw(Coeff v) const {
    FieldElement r = *this;
    r.value_ = v;
    return r;
  }
  void check(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw FieldMismatch(field_.characteristic(), o.field_.characteristic());
  }

  PrimeField field_;
  Coeff value_;
};

inline FieldElement inv(const FieldElement& a) { return a.inv(); }

/// Exact binomial coefficient; zero whenever n < k or either argument is negative.
inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace secantlab

#endif  // SECANTLAB_ARITH_HPP
