#ifndef SECANTLAB_TESTS_KOSZUL_ORACLE_HPP
#define SECANTLAB_TESTS_KOSZUL_ORACLE_HPP

// Betti numbers as Koszul homology: β_{i,j} = dim H_i(x; S/I)_j, computed on
// explicit bases of standard monomials. Independent of the Schreyer frame.

#include <unordered_map>

#include "secantlab/betti.hpp"
#include "secantlab/groebner.hpp"

namespace secantlab::oracle_test {

inline std::size_t rank_mod(std::vector<std::vector<Coeff>> M, const PrimeField& F) {
  if (M.empty()) return 0;
  std::size_t rank = 0, cols = M[0].size();
  for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
    std::size_t p = rank;
    while (p < M.size() && !M[p][c]) ++p;
    if (p == M.size()) continue;
    std::swap(M[p], M[rank]);
    Coeff inv = F.inv(M[rank][c]);
    for (std::size_t r = rank + 1; r < M.size(); ++r) {
      Coeff f = F.mul(M[r][c], inv);
      if (!f) continue;
      for (std::size_t k = c; k < cols; ++k) M[r][k] = F.sub(M[r][k], F.mul(f, M[rank][k]));
    }
    ++rank;
  }
  return rank;
}

/// β_{i,j} of S/I for all j <= max_degree.
inline BettiTable koszul_betti(const Ideal& I, int max_degree) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  const PrimeField& F = R->field();
  GroebnerBasis G = I.groebner_basis();
  auto lead = G.leading_monomials();
  std::vector<std::vector<Monomial>> basis(max_degree + 2);
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index(max_degree + 2);
  for (int d = 0; d <= max_degree + 1; ++d) {
    basis[d] = standard_monomials(lead, n, d);
    for (std::size_t k = 0; k < basis[d].size(); ++k) index[d][basis[d][k]] = k;
  }
  std::vector<std::vector<unsigned>> subsets{{}};
  std::vector<std::vector<std::vector<unsigned>>> by_size(n + 1);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<unsigned> s;
    for (unsigned v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    by_size[s.size()].push_back(s);
  }
  // rank of ∂_i in internal degree j: K_{i,j} -> K_{i-1,j}
  auto rank_d = [&](std::size_t i, int j) -> std::size_t {
    if (i == 0 || i > n || j - static_cast<int>(i) < 0 || j - static_cast<int>(i) + 1 > max_degree + 1) return 0;
    const auto& src_sets = by_size[i];
    const auto& dst_sets = by_size[i - 1];
    std::map<std::vector<unsigned>, std::size_t> dst_pos;
    for (std::size_t k = 0; k < dst_sets.size(); ++k) dst_pos[dst_sets[k]] = k;
    const int ds = j - static_cast<int>(i), dd = ds + 1;
    const std::size_t dst_dim = dst_sets.size() * basis[dd].size();
    std::vector<std::vector<Coeff>> M;
    for (const auto& T : src_sets)
      for (const auto& m : basis[ds]) {
        std::vector<Coeff> row(dst_dim, 0);
        for (std::size_t k = 0; k < T.size(); ++k) {
          auto rest = T;
          rest.erase(rest.begin() + k);
          Monomial xm = m;
          xm.set(T[k], m[T[k]] + 1);
          Polynomial nf = normal_form(Polynomial::term(R, xm, 1), G);
          std::size_t base = dst_pos[rest] * basis[dd].size();
          for (const auto& t : nf.terms()) {
            std::size_t c = base + index[dd].at(t.mono);
            Coeff v = k % 2 ? F.neg(t.coeff) : t.coeff;
            row[c] = F.add(row[c], v);
          }
        }
        M.push_back(std::move(row));
      }
    return rank_mod(std::move(M), F);
  };
  BettiTable B(n);
  for (std::size_t i = 0; i <= n; ++i)
    for (int j = static_cast<int>(i); j <= max_degree; ++j) {
      std::int64_t dim = static_cast<std::int64_t>(by_size[i].size() * basis[j - i].size());
      if (!dim) continue;
      std::int64_t b = dim - static_cast<std::int64_t>(rank_d(i, j)) - static_cast<std::int64_t>(rank_d(i + 1, j));
      B.set(static_cast<int>(i), j, b);
    }
  return B;
}

}  // namespace secantlab::oracle_test

#endif  // SECANTLAB_TESTS_KOSZUL_ORACLE_HPP
