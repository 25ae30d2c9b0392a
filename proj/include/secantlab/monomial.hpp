#ifndef SECANTLAB_MONOMIAL_HPP
#define SECANTLAB_MONOMIAL_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstring>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "secantlab/errors.hpp"

namespace secantlab {

inline constexpr std::size_t kMaxVars = 56;
inline constexpr unsigned kMaxExponent = 127;

/// Exponent vector packed one byte per variable into machine words.
///
/// Bytes past the arity are always zero, so equality, hashing, products and
/// divisibility operate on whole words. Exponents are capped at 127 which keeps
/// every byte-wise sum below 256 and lets divisibility use borrow-free SWAR.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : nvars_(static_cast<std::uint16_t>(nvars)) {
    if (nvars > kMaxVars) throw InvalidArgument("too many variables (max " + std::to_string(kMaxVars) + ")");
  }
  Monomial(std::initializer_list<unsigned> exps) : Monomial(std::span<const unsigned>(exps.begin(), exps.size())) {}
  explicit Monomial(std::span<const unsigned> exps) : Monomial(exps.size()) {
    for (std::size_t i = 0; i < exps.size(); ++i) set(i, exps[i]);
  }

  std::size_t size() const noexcept { return nvars_; }
  unsigned degree() const noexcept { return deg_; }
  unsigned operator[](std::size_t i) const noexcept { return bytes()[i]; }

  void set(std::size_t i, unsigned e) {
    if (e > kMaxExponent) throw InvalidArgument("exponent overflow (max " + std::to_string(kMaxExponent) + ")");
    auto* b = reinterpret_cast<std::uint8_t*>(w_.data());
    deg_ = deg_ - b[i] + e;
    b[i] = static_cast<std::uint8_t>(e);
  }

  bool is_one() const noexcept { return deg_ == 0; }

  /// Debug-path check of the cached degree.
  bool degree_consistent() const noexcept {
    unsigned s = 0;
    for (std::size_t i = 0; i < nvars_; ++i) s += bytes()[i];
    return s == deg_;
  }

  std::size_t words() const noexcept { return (nvars_ + 7) / 8; }
  std::uint64_t word(std::size_t i) const noexcept { return w_[i]; }

  /// Bit i set iff variable i (mod 64) occurs.
  std::uint64_t support_mask() const noexcept {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (bytes()[i]) m |= 1ULL << i;
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    constexpr std::uint64_t high = 0x8080808080808080ULL;
    std::uint64_t over = 0;
    for (std::size_t i = 0; i < a.words(); ++i) {
      r.w_[i] = a.w_[i] + b.w_[i];
      over |= r.w_[i];
    }
    if (over & high) throw InvalidArgument("exponent overflow (max " + std::to_string(kMaxExponent) + ")");
    r.deg_ = a.deg_ + b.deg_;
    return r;
  }

  /// True iff this divides b.
  bool divides(const Monomial& b) const noexcept {
    if (deg_ > b.deg_) return false;
    constexpr std::uint64_t high = 0x8080808080808080ULL;
    for (std::size_t i = 0; i < words(); ++i)
      if ((((b.w_[i] | high) - w_[i]) & high) != high) return false;
    return true;
  }

  /// b / this; caller guarantees divisibility.
  Monomial quotient_of(const Monomial& b) const noexcept {
    Monomial r = b;
    for (std::size_t i = 0; i < words(); ++i) r.w_[i] = b.w_[i] - w_[i];
    r.deg_ = b.deg_ - deg_;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::max(a[i], b[i]));
    return r;
  }
  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial r(a.nvars_);
    for (std::size_t i = 0; i < a.nvars_; ++i) r.set(i, std::min(a[i], b[i]));
    return r;
  }
  friend bool coprime(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.words(); ++i) {
      // a byte is nonzero in both words iff the pair is not coprime
      std::uint64_t x = a.w_[i], y = b.w_[i];
      for (int k = 0; k < 8; ++k, x >>= 8, y >>= 8)
        if ((x & 0xff) && (y & 0xff)) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.nvars_ == b.nvars_ && a.deg_ == b.deg_ && a.w_ == b.w_;
  }

  std::size_t hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ nvars_;
    for (std::size_t i = 0; i < words(); ++i) {
      h ^= w_[i] + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdULL;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  /// Index of the last variable where a and b differ, or -1.
  friend int last_difference(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = a.words(); i-- > 0;) {
      std::uint64_t x = a.w_[i] ^ b.w_[i];
      if (x) return static_cast<int>(i * 8 + (63 - std::countl_zero(x)) / 8);
    }
    return -1;
  }
  /// Index of the first variable where a and b differ, or -1.
  friend int first_difference(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.words(); ++i) {
      std::uint64_t x = a.w_[i] ^ b.w_[i];
      if (x) return static_cast<int>(i * 8 + std::countr_zero(x) / 8);
    }
    return -1;
  }

private:
  const std::uint8_t* bytes() const noexcept { return reinterpret_cast<const std::uint8_t*>(w_.data()); }

  std::array<std::uint64_t, 7> w_{};
  std::uint32_t deg_ = 0;
  std::uint16_t nvars_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

/// A global monomial order.
///
/// - grevlex: total degree, ties broken by the reverse-lexicographic rule.
/// - lex: first differing exponent decides.
/// - block_elim: grevlex on the first `block` variables, then grevlex on the rest;
///   eliminates the first block.
/// - weighted: successive weight rows, then grevlex.
class MonomialOrder {
public:
  enum class Kind { grevlex, lex, block_elim, weighted };

  MonomialOrder() = default;
  static MonomialOrder grevlex() { return MonomialOrder(Kind::grevlex); }
  static MonomialOrder lex() { return MonomialOrder(Kind::lex); }
  static MonomialOrder block_elim(std::size_t first_block_size) {
    MonomialOrder o(Kind::block_elim);
    o.block_ = first_block_size;
    return o;
  }
  static MonomialOrder weighted(std::vector<std::vector<int>> rows) {
    for (const auto& r : rows)
      if (r.empty()) throw InvalidArgument("empty weight row");
    MonomialOrder o(Kind::weighted);
    o.rows_ = std::move(rows);
    return o;
  }

  Kind kind() const noexcept { return kind_; }
  std::size_t block_size() const noexcept { return block_; }
  const std::vector<std::vector<int>>& weight_rows() const noexcept { return rows_; }

  /// True for orders refining the standard total degree, so homogeneous
  /// polynomials keep degree-compatible leading terms.
  bool is_degree_compatible() const noexcept {
    if (kind_ == Kind::grevlex) return true;
    if (kind_ != Kind::weighted) return false;
    return std::all_of(rows_.front().begin(), rows_.front().end(), [&](int w) { return w == rows_.front().front() && w > 0; });
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) throw ArityMismatch(a.size(), b.size());
    return compare_unchecked(a, b);
  }

  std::strong_ordering compare_unchecked(const Monomial& a, const Monomial& b) const noexcept {
    switch (kind_) {
      case Kind::grevlex:
        return grevlex_cmp(a, b);
      case Kind::lex: {
        int i = first_difference(a, b);
        if (i < 0) return std::strong_ordering::equal;
        return a[i] <=> b[i];
      }
      case Kind::block_elim: {
        unsigned da = 0, db = 0;
        for (std::size_t i = 0; i < block_; ++i) {
          da += a[i];
          db += b[i];
        }
        if (da != db) return da <=> db;
        for (std::size_t i = block_; i-- > 0;)
          if (a[i] != b[i]) return b[i] <=> a[i];
        return grevlex_cmp(a, b);
      }
      case Kind::weighted: {
        for (const auto& row : rows_) {
          long wa = 0, wb = 0;
          for (std::size_t i = 0; i < a.size() && i < row.size(); ++i) {
            wa += static_cast<long>(row[i]) * a[i];
            wb += static_cast<long>(row[i]) * b[i];
          }
          if (wa != wb) return wa <=> wb;
        }
        return grevlex_cmp(a, b);
      }
    }
    return std::strong_ordering::equal;
  }

  bool greater(const Monomial& a, const Monomial& b) const noexcept { return compare_unchecked(a, b) > 0; }

  std::string describe() const {
    switch (kind_) {
      case Kind::grevlex:
        return "grevlex";
      case Kind::lex:
        return "lex";
      case Kind::block_elim:
        return "block_elim(" + std::to_string(block_) + ")";
      case Kind::weighted: {
        std::string s = "weighted(";
        for (std::size_t r = 0; r < rows_.size(); ++r) {
          if (r) s += ';';
          for (std::size_t i = 0; i < rows_[r].size(); ++i) s += (i ? "," : "") + std::to_string(rows_[r][i]);
        }
        return s + ")";
      }
    }
    return {};
  }

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  static std::strong_ordering grevlex_cmp(const Monomial& a, const Monomial& b) noexcept {
    if (a.degree() != b.degree()) return a.degree() <=> b.degree();
    int i = last_difference(a, b);
    if (i < 0) return std::strong_ordering::equal;
    return b[i] <=> a[i];
  }

  Kind kind_ = Kind::grevlex;
  std::size_t block_ = 0;
  std::vector<std::vector<int>> rows_;
};

inline std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  return order.compare(a, b);
}

}  // namespace secantlab

template <>
struct std::hash<secantlab::Monomial> {
  std::size_t operator()(const secantlab::Monomial& m) const noexcept { return m.hash(); }
};

#endif  // SECANTLAB_MONOMIAL_HPP
