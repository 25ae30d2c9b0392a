#ifndef SECANTLAB_BETTI_HPP
#define SECANTLAB_BETTI_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "secantlab/errors.hpp"
#include "secantlab/monomial_ideal.hpp"

namespace secantlab {

/// Graded Betti numbers β_{i,j} of S/I, S a polynomial ring in `nvars` variables.
struct BettiTable {
  explicit BettiTable(std::size_t nvars = 0) : nvars(nvars) {}

  std::size_t nvars;
  std::map<std::pair<int, int>, std::int64_t> entries;
  /// Set when only degrees j <= bound were computed.
  std::optional<long> degree_bound;

  int r() const noexcept { return static_cast<int>(nvars) - 1; }
  std::int64_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }
  void set(int i, int j, std::int64_t b) {
    if (b < 0) throw Error("internal: negative Betti number");
    if (b == 0)
      entries.erase({i, j});
    else
      entries[{i, j}] = b;
  }
  /// Total Betti number of step i.
  std::int64_t total(int i) const {
    std::int64_t s = 0;
    for (const auto& [k, v] : entries)
      if (k.first == i) s += v;
    return s;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.nvars == b.nvars && a.entries == b.entries;
  }
};

/// reg(S/I) = max{ j - i : β_{i,j} != 0 }.
inline int regularity(const BettiTable& B) {
  if (B.entries.empty()) throw InvalidArgument("empty Betti table");
  int reg = 0;
  for (const auto& [k, v] : B.entries) reg = std::max(reg, k.second - k.first);
  return reg;
}

/// Largest homological index with a nonzero entry.
inline int projective_dimension(const BettiTable& B) {
  int pd = 0;
  for (const auto& [k, v] : B.entries) pd = std::max(pd, k.first);
  return pd;
}

/// dim K_{p,q} = β_{p,p+q}.
inline std::int64_t koszul_dim(const BettiTable& B, int p, int q) { return B.at(p, p + q); }

/// N_{d,p}: β_{i,i+j} = 0 for all 0 <= i <= p and j >= d.
inline bool check_ndp(const BettiTable& B, int d, int p) {
  if (d < 2 || p < 0) throw InvalidArgument("N_{d,p} needs d >= 2 and p >= 0");
  for (const auto& [k, v] : B.entries)
    if (k.first <= p && k.second - k.first >= d) return false;
  return true;
}

/// Largest p with N_{d,p}: -1 when N_{d,0} fails; `all` when it holds at every step.
struct NdpWindow {
  int p = -1;
  bool all = false;
};

inline NdpWindow max_ndp_p(const BettiTable& B, int d) {
  NdpWindow w;
  const int pd = projective_dimension(B);
  for (int p = 0; p <= pd; ++p) {
    if (!check_ndp(B, d, p)) return w;
    w.p = p;
  }
  w.all = true;
  return w;
}

/// Auslander-Buchsbaum: S/I is Cohen-Macaulay iff pd = codim, with codim = r - dim of the projective variety.
inline bool is_acm(const BettiTable& B, int projective_dim_of_variety) {
  return projective_dimension(B) == B.r() - projective_dim_of_variety;
}

/// min{ j : β_{1,j} != 0 }.
inline int min_generator_degree(const BettiTable& B) {
  for (const auto& [k, v] : B.entries)
    if (k.first == 1) return k.second;
  throw ZeroIdeal();
}

/// Σ_i (-1)^i Σ_j β_{i,j} t^j: the Hilbert series numerator over (1 - t)^nvars.
inline IntPoly betti_numerator(const BettiTable& B) {
  IntPoly p;
  for (const auto& [k, v] : B.entries) {
    auto j = static_cast<std::size_t>(k.second);
    if (p.size() <= j) p.resize(j + 1, 0);
    p[j] += (k.first % 2 ? -v : v);
  }
  trim(p);
  return p;
}

/// Macaulay2-style display: columns are i, rows are j - i.
inline std::string to_text(const BettiTable& B) {
  if (B.entries.empty()) return "(empty)\n";
  int maxi = projective_dimension(B), maxrow = regularity(B), minrow = 0;
  for (const auto& [k, v] : B.entries) minrow = std::min(minrow, k.second - k.first);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{""};
  for (int i = 0; i <= maxi; ++i) head.push_back(std::to_string(i));
  cells.push_back(head);
  std::vector<std::string> tot{"total:"};
  for (int i = 0; i <= maxi; ++i) tot.push_back(std::to_string(B.total(i)));
  cells.push_back(tot);
  for (int row = minrow; row <= maxrow; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (int i = 0; i <= maxi; ++i) {
      std::int64_t b = B.at(i, i + row);
      line.push_back(b ? std::to_string(b) : ".");
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(maxi + 2, 0);
  for (const auto& l : cells)
    for (std::size_t c = 0; c < l.size(); ++c) width[c] = std::max(width[c], l[c].size());
  std::ostringstream os;
  for (const auto& l : cells) {
    std::string s;
    for (std::size_t c = 0; c < l.size(); ++c) {
      std::string cell = l[c];
      if (c) s += " ";
      s += std::string(width[c] - cell.size(), ' ') + cell;
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    os << s << "\n";
  }
  if (B.degree_bound) os << "(degrees <= " << *B.degree_bound << " only)\n";
  return os.str();
}

}  // namespace secantlab

#endif  // SECANTLAB_BETTI_HPP
