#ifndef SECANTLAB_RESOLUTION_HPP
#define SECANTLAB_RESOLUTION_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

#include "secantlab/betti.hpp"
#include "secantlab/groebner.hpp"

namespace secantlab {

struct ResolutionOptions {
  GbOptions gb = f4_options();
  /// Only compute β_{i,j} for j <= degree_bound.
  std::optional<long> degree_bound;
  /// Stop after this homological index (inclusive); unset means the full length.
  std::optional<int> max_level;
};

struct ResolutionStats {
  std::vector<std::size_t> frame_ranks;  // non-minimal Schreyer frame size per level
};

namespace detail {

/// Term of a vector in a Schreyer frame: total monomial u·τ_comp, component, coefficient.
struct ModTerm {
  Monomial total;
  std::uint32_t comp;
  Coeff coeff;
};

struct FrameElem {
  Monomial tau;             // total monomial of the lead term
  std::uint32_t lead_comp;  // component of the lead term one level down
  std::vector<ModTerm> vec; // image under the differential, descending
};

class SchreyerFrame {
public:
  SchreyerFrame(const GroebnerBasis& G, const ResolutionOptions& opts)
      : ring_(G.ring()), field_(G.ring()->field()), opts_(opts) {
    // level 0: the free module S with one generator of degree 0
    levels_.push_back({FrameElem{ring_->one(), 0, {}}});
    // level 1: basis elements sorted lex-descending by leading monomial, which bounds the frame length
    std::vector<Polynomial> g = G.elements();
    auto lexo = MonomialOrder::lex();
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return lexo.greater(a.leading_monomial(), b.leading_monomial());
    });
    std::vector<FrameElem> lvl;
    for (const auto& p : g) {
      if (opts_.degree_bound && static_cast<long>(p.total_degree()) > *opts_.degree_bound) continue;
      FrameElem e{p.leading_monomial(), 0, {}};
      for (const auto& t : p.terms()) e.vec.push_back({t.mono, 0, t.coeff});
      lvl.push_back(std::move(e));
    }
    levels_.push_back(std::move(lvl));
  }

  void build() {
    const std::size_t cap = ring_->nvars() + 1;
    while (!levels_.back().empty() && levels_.size() <= cap) {
      if (opts_.max_level && static_cast<int>(levels_.size()) > *opts_.max_level + 1) break;
      levels_.push_back(next_level(levels_.size() - 1));
    }
  }

  const std::vector<std::vector<FrameElem>>& levels() const noexcept { return levels_; }

  /// Ranks of the constant parts of the differential d_i, by internal degree.
  std::map<long, std::size_t> constant_ranks(std::size_t i) const {
    std::map<long, std::size_t> out;
    if (i == 0 || i >= levels_.size()) return out;
    const auto& src = levels_[i];
    const auto& dst = levels_[i - 1];
    // group both levels by degree
    std::map<long, std::vector<std::size_t>> src_by_deg, dst_by_deg;
    for (std::size_t k = 0; k < src.size(); ++k) src_by_deg[src[k].tau.degree()].push_back(k);
    for (std::size_t k = 0; k < dst.size(); ++k) dst_by_deg[dst[k].tau.degree()].push_back(k);
    for (const auto& [deg, rows] : src_by_deg) {
      auto it = dst_by_deg.find(deg);
      if (it == dst_by_deg.end()) continue;
      std::unordered_map<std::uint32_t, std::size_t> col;
      for (std::size_t c = 0; c < it->second.size(); ++c) col[static_cast<std::uint32_t>(it->second[c])] = c;
      std::vector<std::vector<Coeff>> M;
      for (auto r : rows) {
        std::vector<Coeff> row(it->second.size(), 0);
        bool any = false;
        for (const auto& t : src[r].vec) {
          if (t.total != dst[t.comp].tau) continue;
          row[col.at(t.comp)] = t.coeff;
          any = true;
        }
        if (any) M.push_back(std::move(row));
      }
      std::size_t rk = rank_mod_p(M);
      if (rk) out[deg] = rk;
    }
    return out;
  }

private:
  bool schreyer_greater(const Monomial& ta, std::uint32_t ca, const Monomial& tb, std::uint32_t cb) const {
    auto c = ring_->order().compare_unchecked(ta, tb);
    if (c != 0) return c > 0;
    return ca > cb;
  }

  std::size_t rank_mod_p(std::vector<std::vector<Coeff>>& M) const {
    if (M.empty()) return 0;
    const std::size_t cols = M[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < M.size(); ++c) {
      std::size_t piv = rank;
      while (piv < M.size() && M[piv][c] == 0) ++piv;
      if (piv == M.size()) continue;
      std::swap(M[piv], M[rank]);
      Coeff inv = field_.inv(M[rank][c]);
      for (auto& x : M[rank]) x = field_.mul(x, inv);
      for (std::size_t r = rank + 1; r < M.size(); ++r) {
        Coeff f = M[r][c];
        if (!f) continue;
        for (std::size_t k = c; k < cols; ++k) M[r][k] = field_.sub(M[r][k], field_.mul(f, M[rank][k]));
      }
      ++rank;
    }
    return rank;
  }

  struct Key {
    Monomial total;
    std::uint32_t comp;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return k.total.hash() * 31 + k.comp; }
  };

  std::vector<FrameElem> next_level(std::size_t j) {
    const auto& cur = levels_[j];
    // children of each element: minimal generators of lcm(τ_a, τ_b)/τ_b over earlier a with the same lead component
    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> by_comp;
    std::vector<FrameElem> next;
    auto lexo = MonomialOrder::lex();
    for (std::uint32_t b = 0; b < cur.size(); ++b) {
      auto& sib = by_comp[cur[b].lead_comp];
      std::vector<std::pair<Monomial, std::uint32_t>> cand;
      for (auto a : sib) cand.push_back({cur[b].tau.quotient_of(lcm(cur[a].tau, cur[b].tau)), a});
      sib.push_back(b);
      std::sort(cand.begin(), cand.end(), [](const auto& x, const auto& y) { return x.first.degree() < y.first.degree(); });
      std::vector<std::pair<Monomial, std::uint32_t>> mins;
      for (const auto& c : cand) {
        bool red = false;
        for (const auto& m : mins)
          if (m.first.divides(c.first)) {
            red = true;
            break;
          }
        if (!red) mins.push_back(c);
      }
      std::sort(mins.begin(), mins.end(), [&](const auto& x, const auto& y) { return lexo.greater(x.first, y.first); });
      for (const auto& [n, a] : mins) {
        Monomial tau = n * cur[b].tau;
        if (opts_.degree_bound && static_cast<long>(tau.degree()) > *opts_.degree_bound) continue;
        next.push_back(FrameElem{tau, b, syzygy(j, a, b, n)});
      }
    }
    return next;
  }

  /// n·ε_b - m·ε_a - Σ q_x ε_x, where the quotients q come from dividing
  /// n·v_b - m·v_a by the level-j vectors.
  std::vector<ModTerm> syzygy(std::size_t j, std::uint32_t a, std::uint32_t b, const Monomial& n) {
    const auto& cur = levels_[j];
    const Monomial tau = n * cur[b].tau;
    const Monomial m = cur[a].tau.quotient_of(tau);
    std::unordered_map<Key, Coeff, KeyHash> acc;
    auto cmp = [this](const Key& x, const Key& y) { return schreyer_greater(y.total, y.comp, x.total, x.comp); };
    std::priority_queue<Key, std::vector<Key>, decltype(cmp)> heap(cmp);
    auto add = [&](const Monomial& total, std::uint32_t comp, Coeff c) {
      if (!c) return;
      Key k{total, comp};
      auto [it, fresh] = acc.try_emplace(k, c);
      if (fresh)
        heap.push(std::move(k));
      else
        it->second = field_.add(it->second, c);
    };
    for (std::size_t t = 1; t < cur[b].vec.size(); ++t) add(n * cur[b].vec[t].total, cur[b].vec[t].comp, cur[b].vec[t].coeff);
    for (std::size_t t = 1; t < cur[a].vec.size(); ++t)
      add(m * cur[a].vec[t].total, cur[a].vec[t].comp, field_.neg(cur[a].vec[t].coeff));

    std::vector<ModTerm> out;
    out.push_back({tau, b, 1});
    out.push_back({tau, a, field_.neg(1)});
    std::unordered_map<Key, Coeff, KeyHash> quot;
    while (!heap.empty()) {
      Key k = heap.top();
      heap.pop();
      auto it = acc.find(k);
      Coeff c = it->second;
      acc.erase(it);
      if (!c) continue;
      // find a level-j element with this lead component whose τ divides the total
      const auto& cands = children_of(j, k.comp);
      std::uint32_t x = UINT32_MAX;
      for (auto y : cands)
        if (cur[y].tau.divides(k.total)) {
          x = y;
          break;
        }
      if (x == UINT32_MAX) throw Error("internal: Schreyer division left a remainder");
      Monomial q = cur[x].tau.quotient_of(k.total);
      // record -c·q ε_x; subtract c·q·v_x (its lead cancels)
      Key qk{k.total, x};
      auto [qi, fresh] = quot.try_emplace(qk, field_.neg(c));
      if (!fresh) qi->second = field_.sub(qi->second, c);
      Coeff nc = field_.neg(c);
      for (std::size_t t = 1; t < cur[x].vec.size(); ++t)
        add(q * cur[x].vec[t].total, cur[x].vec[t].comp, field_.mul(nc, cur[x].vec[t].coeff));
    }
    for (auto& [k, c] : quot)
      if (c) out.push_back({k.total, k.comp, c});
    std::sort(out.begin() + 2, out.end(), [this](const ModTerm& x, const ModTerm& y) {
      return schreyer_greater(x.total, x.comp, y.total, y.comp);
    });
    return out;
  }

  /// Level-j elements whose lead component is `comp` (cached per level).
  const std::vector<std::uint32_t>& children_of(std::size_t j, std::uint32_t comp) {
    if (child_level_ != j) {
      child_level_ = j;
      children_.clear();
      for (std::uint32_t x = 0; x < levels_[j].size(); ++x) children_[levels_[j][x].lead_comp].push_back(x);
    }
    static const std::vector<std::uint32_t> none;
    auto it = children_.find(comp);
    return it == children_.end() ? none : it->second;
  }

  RingPtr ring_;
  PrimeField field_;
  ResolutionOptions opts_;
  std::vector<std::vector<FrameElem>> levels_;
  std::size_t child_level_ = SIZE_MAX;
  std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> children_;
};

}  // namespace detail

/// Minimal graded Betti numbers of S/I from a Schreyer frame on the reduced
/// Groebner basis: β_{i,j} = f_{i,j} - rank(d_i ⊗ k)_j - rank(d_{i+1} ⊗ k)_j.
inline BettiTable minimal_free_resolution(const Ideal& I, const ResolutionOptions& opts = {},
                                          ResolutionStats* stats = nullptr) {
  const RingPtr& R = I.ring();
  if (!R->standard_grading()) throw InvalidArgument("resolutions need the standard grading");
  if (!I.is_homogeneous()) throw InvalidArgument("resolutions need a homogeneous ideal");
  GbOptions go = opts.gb;
  if (opts.degree_bound) go.degree_bound = opts.degree_bound;
  GroebnerBasis G = I.groebner_basis(go);
  if (G.is_unit()) throw InvalidArgument("the unit ideal has no quotient to resolve");
  detail::SchreyerFrame frame(G, opts);
  frame.build();
  const auto& L = frame.levels();
  BettiTable B(R->nvars());
  B.degree_bound = opts.degree_bound;
  std::vector<std::map<long, std::size_t>> ranks(L.size() + 1);
  for (std::size_t i = 1; i < L.size(); ++i) ranks[i] = frame.constant_ranks(i);
  for (std::size_t i = 0; i < L.size(); ++i) {
    if (opts.max_level && static_cast<int>(i) > *opts.max_level) break;
    std::map<long, std::int64_t> f;
    for (const auto& e : L[i]) ++f[e.tau.degree()];
    for (const auto& [j, cnt] : f) {
      std::int64_t b = cnt;
      if (auto it = ranks[i].find(j); it != ranks[i].end()) b -= static_cast<std::int64_t>(it->second);
      if (auto it = ranks[i + 1].find(j); it != ranks[i + 1].end()) b -= static_cast<std::int64_t>(it->second);
      if (b) B.set(static_cast<int>(i), static_cast<int>(j), b);
    }
  }
  if (stats) {
    stats->frame_ranks.clear();
    for (const auto& l : L) stats->frame_ranks.push_back(l.size());
  }
  return B;
}

}  // namespace secantlab

#endif  // SECANTLAB_RESOLUTION_HPP
