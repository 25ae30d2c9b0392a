#ifndef SECANTLAB_MONOMIAL_IDEAL_HPP
#define SECANTLAB_MONOMIAL_IDEAL_HPP

#include <algorithm>
#include <cstdint>
#include <vector>

#include "secantlab/monomial.hpp"

namespace secantlab {

/// Dense integer polynomial in t, lowest degree first.
using IntPoly = std::vector<std::int64_t>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly poly_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

inline IntPoly poly_add(IntPoly a, const IntPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

/// Keeps only generators not divisible by another generator; sorted and deduplicated.
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.words(); ++i)
      if (a.word(i) != b.word(i)) return a.word(i) < b.word(i);
    return false;
  });
  std::vector<Monomial> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (h.divides(g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  return out;
}

namespace detail {

inline IntPoly one_minus_t_pow(long e) {
  IntPoly r(static_cast<std::size_t>(e + 1), 0);
  r[0] = 1;
  r[static_cast<std::size_t>(e)] -= 1;
  trim(r);
  return r;
}

inline long wdeg(const Monomial& m, const std::vector<int>& w) {
  long d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<long>(w[i]) * m[i];
  return d;
}

inline IntPoly numerator_rec(std::vector<Monomial> gens, const std::vector<int>& w) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  const std::size_t n = gens.front().size();
  // count occurrences; pure-power/coprime base case
  std::vector<unsigned> count(n, 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < n; ++i)
      if (g[i]) ++count[i];
  std::size_t pivot = n;
  unsigned best = 1;
  for (std::size_t i = 0; i < n; ++i)
    if (count[i] > best) {
      best = count[i];
      pivot = i;
    }
  if (pivot == n) {
    IntPoly r{1};
    for (const auto& g : gens) r = poly_mul(r, one_minus_t_pow(wdeg(g, w)));
    return r;
  }
  unsigned a = ~0u;
  for (const auto& g : gens)
    if (g[pivot]) a = std::min(a, g[pivot]);
  // I + (x^a): generators free of x, plus the coprime x^a
  std::vector<Monomial> plus, colon;
  for (const auto& g : gens) {
    if (!g[pivot]) plus.push_back(g);
    Monomial q = g;
    q.set(pivot, g[pivot] >= a ? g[pivot] - a : 0);
    colon.push_back(q);
  }
  IntPoly left = poly_mul(numerator_rec(std::move(plus), w), one_minus_t_pow(static_cast<long>(a) * w[pivot]));
  IntPoly right = numerator_rec(std::move(colon), w);
  IntPoly shift(static_cast<std::size_t>(a) * w[pivot], 0);
  shift.insert(shift.end(), right.begin(), right.end());
  return poly_add(left, shift);
}

}  // namespace detail

/// Numerator N(t) of the Hilbert series N(t) / prod_i (1 - t^{w_i}) of
/// k[x]/(gens), by pivot recursion on a variable of maximal occurrence.
inline IntPoly monomial_hilbert_numerator(const std::vector<Monomial>& gens, std::size_t nvars,
                                          const std::vector<int>& weights = {}) {
  std::vector<int> w = weights.empty() ? std::vector<int>(nvars, 1) : weights;
  IntPoly r = detail::numerator_rec(gens, w);
  trim(r);
  return r;
}

/// All monomials of (standard) degree d in n variables not in the monomial ideal.
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& lead, std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  Monomial m(n);
  // enumerate compositions of d recursively
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n || n == 0) {
      if (n) m.set(i, left);
      if (n == 0 && left) return;
      bool in = false;
      for (const auto& g : lead)
        if (g.divides(m)) {
          in = true;
          break;
        }
      if (!in) out.push_back(m);
      if (n) m.set(i, 0);
      return;
    }
    for (unsigned e = left + 1; e-- > 0;) {
      m.set(i, e);
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, d);
  return out;
}

}  // namespace secantlab

#endif  // SECANTLAB_MONOMIAL_IDEAL_HPP
