#ifndef SECANTLAB_GROEBNER_HPP
#define SECANTLAB_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "secantlab/monomial_ideal.hpp"
#include "secantlab/polynomial.hpp"

namespace secantlab {

inline constexpr std::uint64_t kDefaultPairBudget = 2'000'000;

struct GbOptions {
  enum class Strategy { buchberger, f4 };
  Strategy strategy = Strategy::buchberger;
  std::uint64_t pair_budget = kDefaultPairBudget;
  /// Homogeneous input only: ignore pairs above this (weighted) degree.
  std::optional<long> degree_bound;
  /// Homogeneous input only: Hilbert series numerator of the ideal, over
  /// prod (1 - t^w_i). Degrees whose Hilbert function is already attained are skipped.
  std::optional<std::vector<std::int64_t>> hilbert_numerator;
};

inline GbOptions f4_options(std::uint64_t pair_budget = kDefaultPairBudget) {
  GbOptions o;
  o.strategy = GbOptions::Strategy::f4;
  o.pair_budget = pair_budget;
  return o;
}

struct GbStats {
  std::uint64_t pairs_processed = 0;
  std::uint64_t pairs_skipped_by_hilbert = 0;
  std::uint64_t zero_reductions = 0;
  long max_degree = 0;
};

/// Reduced Groebner basis: monic, interreduced, sorted by ascending leading monomial.
class GroebnerBasis {
public:
  GroebnerBasis() = default;
  GroebnerBasis(RingPtr ring, std::vector<Polynomial> elements, bool truncated = false)
      : ring_(std::move(ring)), elements_(std::move(elements)), truncated_(truncated) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialOrder& order() const noexcept { return ring_->order(); }
  const std::vector<Polynomial>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool is_unit() const noexcept { return elements_.size() == 1 && elements_[0].is_constant(); }
  bool truncated() const noexcept { return truncated_; }
  std::vector<Monomial> leading_monomials() const {
    std::vector<Monomial> v;
    for (const auto& g : elements_) v.push_back(g.leading_monomial());
    return v;
  }

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    if (a.elements_.size() != b.elements_.size()) return false;
    for (std::size_t i = 0; i < a.elements_.size(); ++i)
      if (a.elements_[i].terms() != b.elements_[i].terms()) return false;
    return a.ring_->order() == b.ring_->order();
  }

private:
  RingPtr ring_;
  std::vector<Polynomial> elements_;
  bool truncated_ = false;
};

namespace detail {

/// Remainder of f on division by `basis`; reducers found by leading-monomial divisibility.
inline Polynomial reduce_full(Polynomial f, const std::vector<const Polynomial*>& basis, bool tail = true) {
  const auto& F = f.ring()->field();
  std::vector<std::uint64_t> masks;
  masks.reserve(basis.size());
  for (const auto* g : basis) masks.push_back(g->leading_monomial().support_mask());
  std::vector<Term> rem;
  while (!f.is_zero()) {
    const Term lead = f.leading();
    std::uint64_t lm = lead.mono.support_mask();
    const Polynomial* red = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if ((masks[k] & ~lm) == 0 && basis[k]->leading_monomial().divides(lead.mono)) {
        red = basis[k];
        break;
      }
    if (red) {
      Coeff c = F.neg(F.mul(lead.coeff, F.inv(red->leading_coeff())));
      f = f.add_scaled(*red, c, red->leading_monomial().quotient_of(lead.mono));
    } else {
      if (!tail) break;
      rem.push_back(lead);
      f.mutable_terms().erase(f.mutable_terms().begin());
    }
  }
  if (!tail) {
    rem.insert(rem.end(), f.terms().begin(), f.terms().end());
    return Polynomial::from_sorted(f.ring(), std::move(rem));
  }
  return Polynomial::from_sorted(f.ring(), std::move(rem));
}

inline std::vector<std::int64_t> series_coefficients(const std::vector<std::int64_t>& numerator,
                                                     const std::vector<int>& weights, long up_to) {
  // numerator / prod (1 - t^w)
  std::vector<std::int64_t> s(static_cast<std::size_t>(up_to + 1), 0);
  for (std::size_t i = 0; i < numerator.size() && static_cast<long>(i) <= up_to; ++i) s[i] = numerator[i];
  for (int w : weights)
    for (long d = w; d <= up_to; ++d) s[d] += s[d - w];
  return s;
}

class GbEngine {
public:
  GbEngine(RingPtr ring, const GbOptions& opts) : ring_(std::move(ring)), opts_(opts), F_(ring_->field()) {}

  GroebnerBasis run(const std::vector<Polynomial>& input) {
    std::vector<Polynomial> gens;
    homogeneous_ = true;
    for (const auto& g : input) {
      if (g.is_zero()) continue;
      Polynomial h = g.in_ring(ring_);
      if (!h.is_homogeneous()) homogeneous_ = false;
      gens.push_back(h.monic());
    }
    if (!homogeneous_ && (opts_.degree_bound || opts_.hilbert_numerator))
      throw InvalidArgument("degree truncation and Hilbert hints need homogeneous input");
    degree_compatible_normal_ = homogeneous_ || ring_->order().is_degree_compatible();
    std::sort(gens.begin(), gens.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ring_->order().greater(b.leading_monomial(), a.leading_monomial());
    });
    if (homogeneous_ && opts_.strategy == GbOptions::Strategy::f4) {
      // homogeneous input: generators enter degree by degree with the pairs
      for (auto& g : gens) pending_.push_back(std::move(g));
    } else {
      for (auto& g : gens) {
        Polynomial r = reduce_against_active(g);
        if (!r.is_zero()) insert(r.monic(), weighted_sugar(r));
      }
    }
    if (opts_.strategy == GbOptions::Strategy::f4)
      loop_f4();
    else
      loop_buchberger();
    return finish();
  }

  const GbStats& stats() const noexcept { return stats_; }

private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    long key;  // selection degree (normal or sugar)
  };

  long wdeg(const Monomial& m) const { return ring_->weighted_degree(m); }

  long weighted_sugar(const Polynomial& f) const { return f.max_weighted_degree(); }

  Polynomial reduce_against_active(const Polynomial& f, bool tail = false) const {
    std::vector<const Polynomial*> act;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) act.push_back(&basis_[k]);
    return reduce_full(f, act, tail);
  }

  bool pair_less(const Pair& a, const Pair& b) const {
    if (a.key != b.key) return a.key < b.key;
    auto c = ring_->order().compare_unchecked(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }

  long pair_key(std::size_t i, std::size_t j, const Monomial& l) const {
    if (degree_compatible_normal_) return wdeg(l);
    long si = sugar_[i] + wdeg(l) - wdeg(basis_[i].leading_monomial());
    long sj = sugar_[j] + wdeg(l) - wdeg(basis_[j].leading_monomial());
    return std::max(si, sj);
  }

  /// Gebauer-Moeller update with the new element h.
  void insert(Polynomial h, long sugar) {
    const std::size_t hi = basis_.size();
    basis_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    masks_.push_back(basis_[hi].leading_monomial().support_mask());
    const Monomial& lh = basis_[hi].leading_monomial();

    struct Cand {
      std::size_t g;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> C;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g]) {
        const Monomial& lg = basis_[g].leading_monomial();
        C.push_back({g, lcm(lh, lg), coprime(lh, lg)});
      }
    std::vector<Cand> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      bool keep = C[a].coprime;
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (C[b].lcm.divides(C[a].lcm)) keep = false;
        for (std::size_t b = 0; b < D.size() && keep; ++b)
          if (D[b].lcm.divides(C[a].lcm)) keep = false;
      }
      if (keep) D.push_back(C[a]);
    }
    std::vector<Pair> kept;
    kept.reserve(pairs_.size() + D.size());
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = lcm(basis_[p.i].leading_monomial(), lh);
        Monomial l2 = lcm(basis_[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) continue;
      }
      kept.push_back(std::move(p));
    }
    for (auto& d : D)
      if (!d.coprime) kept.push_back({d.g, hi, d.lcm, pair_key(d.g, hi, d.lcm)});
    pairs_ = std::move(kept);
    pairs_dirty_ = true;
    for (std::size_t g = 0; g < hi; ++g)
      if (active_[g] && lh.divides(basis_[g].leading_monomial())) active_[g] = false;
  }

  void sort_pairs() {
    if (!pairs_dirty_) return;
    // descending so the minimum sits at the back
    std::sort(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) { return pair_less(b, a); });
    pairs_dirty_ = false;
  }

  void count_pair() {
    if (++stats_.pairs_processed > opts_.pair_budget) throw ResourceLimit(stats_.pairs_processed, opts_.pair_budget);
  }

  bool beyond_bound(long key) {
    if (opts_.degree_bound && key > *opts_.degree_bound) {
      truncated_ = true;
      return true;
    }
    return false;
  }

  Polynomial spoly(const Pair& p) const {
    const Polynomial& f = basis_[p.i];
    const Polynomial& g = basis_[p.j];
    Polynomial a = f.times_monomial(f.leading_monomial().quotient_of(p.lcm));
    return a.add_scaled(g, F_.neg(1), g.leading_monomial().quotient_of(p.lcm));
  }

  void loop_buchberger() {
    while (!pairs_.empty()) {
      sort_pairs();
      Pair p = std::move(pairs_.back());
      pairs_.pop_back();
      if (beyond_bound(p.key)) continue;
      count_pair();
      stats_.max_degree = std::max(stats_.max_degree, p.key);
      long sug = pair_key(p.i, p.j, p.lcm);
      Polynomial r = reduce_against_active(spoly(p));
      if (r.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      insert(r.monic(), std::max(sug, weighted_sugar(r)));
    }
  }

  // ---- F4-style batched reduction ----

  struct Row {
    std::vector<std::uint32_t> cols;
    std::vector<Coeff> vals;
  };

  /// Current Hilbert function value of the leading-monomial ideal in degree d.
  std::int64_t current_hf(long d) const {
    std::vector<Monomial> lms;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) lms.push_back(basis_[k].leading_monomial());
    auto num = monomial_hilbert_numerator(lms, ring_->nvars(), ring_->weights());
    return series_coefficients(num, ring_->weights(), d)[static_cast<std::size_t>(d)];
  }

  void loop_f4() {
    while (!pairs_.empty() || !pending_.empty()) {
      sort_pairs();
      long d = std::numeric_limits<long>::max();
      if (!pairs_.empty()) d = pairs_.back().key;
      if (!pending_.empty()) d = std::min(d, weighted_sugar(pending_.front()));
      if (opts_.degree_bound && d > *opts_.degree_bound) {
        truncated_ = true;
        break;
      }
      std::vector<Pair> sel;
      while (!pairs_.empty() && pairs_.back().key == d) {
        sel.push_back(std::move(pairs_.back()));
        pairs_.pop_back();
      }
      std::vector<Polynomial> gens;
      while (!pending_.empty() && weighted_sugar(pending_.front()) == d) {
        gens.push_back(std::move(pending_.front()));
        pending_.erase(pending_.begin());
      }
      if (homogeneous_ && opts_.hilbert_numerator && gens.empty()) {
        auto expected = series_coefficients(*opts_.hilbert_numerator, ring_->weights(), d);
        if (current_hf(d) == expected[static_cast<std::size_t>(d)]) {
          stats_.pairs_skipped_by_hilbert += sel.size();
          continue;
        }
      }
      for (std::size_t k = 0; k < sel.size(); ++k) count_pair();
      stats_.max_degree = std::max(stats_.max_degree, d);
      f4_reduce(sel, gens);
    }
  }

  void f4_reduce(const std::vector<Pair>& sel, const std::vector<Polynomial>& gens) {
    // Rows are (multiplier, basis index) products, plus raw generators.
    struct Product {
      Monomial mult;
      std::size_t idx;  // basis index, or npos for generator rows
      std::size_t gen;
    };
    constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<Product> prods;
    std::unordered_map<Monomial, std::vector<std::size_t>, MonomialHash> seen_prod;  // product lm -> basis idx
    auto add_prod = [&](const Monomial& mult, std::size_t idx) {
      Monomial lm = basis_[idx].leading_monomial() * mult;
      auto& v = seen_prod[lm];
      if (std::find(v.begin(), v.end(), idx) != v.end()) return;
      v.push_back(idx);
      prods.push_back({mult, idx, npos});
    };
    for (const auto& p : sel) {
      add_prod(basis_[p.i].leading_monomial().quotient_of(p.lcm), p.i);
      add_prod(basis_[p.j].leading_monomial().quotient_of(p.lcm), p.j);
    }
    for (std::size_t g = 0; g < gens.size(); ++g) prods.push_back({ring_->one(), npos, g});

    auto poly_of = [&](const Product& pr) -> const Polynomial& {
      return pr.idx == npos ? gens[pr.gen] : basis_[pr.idx];
    };

    // symbolic preprocessing
    std::unordered_map<Monomial, std::uint32_t, MonomialHash> col_of;
    std::vector<Monomial> monos;
    std::vector<char> done;
    auto touch = [&](const Monomial& m) {
      auto [it, fresh] = col_of.try_emplace(m, static_cast<std::uint32_t>(monos.size()));
      if (fresh) {
        monos.push_back(m);
        done.push_back(0);
      }
      return it->second;
    };
    for (const auto& pr : prods) {
      const Polynomial& f = poly_of(pr);
      for (const auto& t : f.terms()) touch(pr.mult.is_one() ? t.mono : t.mono * pr.mult);
      if (pr.idx != npos) done[col_of[f.leading_monomial() * pr.mult]] = 1;
    }
    std::vector<std::size_t> act;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) act.push_back(k);
    for (std::size_t c = 0; c < monos.size(); ++c) {
      if (done[c]) continue;
      done[c] = 1;
      const Monomial m = monos[c];
      std::uint64_t mm = m.support_mask();
      for (std::size_t k : act) {
        if ((masks_[k] & ~mm) == 0 && basis_[k].leading_monomial().divides(m)) {
          Monomial mult = basis_[k].leading_monomial().quotient_of(m);
          prods.push_back({mult, k, npos});
          for (const auto& t : basis_[k].terms()) touch(t.mono * mult);
          break;
        }
      }
    }

    // column order: descending monomials
    const std::size_t ncols = monos.size();
    std::vector<std::uint32_t> perm(ncols);
    for (std::uint32_t i = 0; i < ncols; ++i) perm[i] = i;
    const auto& ord = ring_->order();
    std::sort(perm.begin(), perm.end(), [&](std::uint32_t a, std::uint32_t b) { return ord.greater(monos[a], monos[b]); });
    std::vector<std::uint32_t> rank(ncols);
    for (std::uint32_t i = 0; i < ncols; ++i) rank[perm[i]] = i;

    std::vector<Row> rows;
    rows.reserve(prods.size());
    for (const auto& pr : prods) {
      const Polynomial& f = poly_of(pr);
      Row r;
      r.cols.reserve(f.size());
      r.vals.reserve(f.size());
      for (const auto& t : f.terms()) {
        r.cols.push_back(rank[col_of[pr.mult.is_one() ? t.mono : t.mono * pr.mult]]);
        r.vals.push_back(t.coeff);
      }
      rows.push_back(std::move(r));
    }

    // pivots: first row with each leading column (rows are monic)
    std::vector<std::int64_t> pivot(ncols, -1);
    std::vector<std::size_t> todo;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::uint32_t lc = rows[r].cols.front();
      if (pivot[lc] < 0 && prods[r].idx != npos)
        pivot[lc] = static_cast<std::int64_t>(r);
      else
        todo.push_back(r);
    }
    std::vector<std::size_t> fresh_rows;
    std::vector<std::uint64_t> acc(ncols, 0);
    const std::uint64_t p = F_.characteristic();
    const std::uint64_t max_adds =
        std::max<std::uint64_t>(1, (std::numeric_limits<std::uint64_t>::max() - (p - 1)) / ((p - 1) * (p - 1)) - 1);
    for (std::size_t r : todo) {
      Row& row = rows[r];
      std::uint32_t first = row.cols.front(), last = row.cols.back();
      for (std::size_t k = 0; k < row.cols.size(); ++k) acc[row.cols[k]] = row.vals[k];
      std::uint64_t adds = 0;
      std::int64_t newlead = -1;
      for (std::uint32_t c = first; c <= last; ++c) {
        if (!acc[c]) continue;
        acc[c] %= p;
        if (!acc[c]) continue;
        if (pivot[c] < 0) {
          if (newlead < 0) newlead = c;
          continue;
        }
        const Row& pv = rows[static_cast<std::size_t>(pivot[c])];
        std::uint64_t mult = p - acc[c];
        if (++adds >= max_adds) {
          for (std::uint32_t k = c; k <= last; ++k) acc[k] %= p;
          adds = 0;
        }
        for (std::size_t k = 0; k < pv.cols.size(); ++k) acc[pv.cols[k]] += mult * pv.vals[k];
        last = std::max(last, pv.cols.back());
        acc[c] = 0;
      }
      Row out;
      if (newlead >= 0) {
        for (std::uint32_t c = static_cast<std::uint32_t>(newlead); c <= last; ++c) {
          std::uint64_t v = acc[c] % p;
          if (v) {
            out.cols.push_back(c);
            out.vals.push_back(static_cast<Coeff>(v));
          }
        }
      }
      for (std::uint32_t c = first; c <= last; ++c) acc[c] = 0;
      if (out.cols.empty()) {
        ++stats_.zero_reductions;
        row = Row{};
        continue;
      }
      Coeff inv = F_.inv(out.vals.front());
      for (auto& v : out.vals) v = F_.mul(v, inv);
      row = std::move(out);
      pivot[row.cols.front()] = static_cast<std::int64_t>(r);
      fresh_rows.push_back(r);
    }

    // new elements, ascending leading monomial
    std::sort(fresh_rows.begin(), fresh_rows.end(),
              [&](std::size_t a, std::size_t b) { return rows[a].cols.front() > rows[b].cols.front(); });
    for (std::size_t r : fresh_rows) {
      std::vector<Term> terms;
      terms.reserve(rows[r].cols.size());
      for (std::size_t k = 0; k < rows[r].cols.size(); ++k)
        terms.push_back({monos[perm[rows[r].cols[k]]], rows[r].vals[k]});
      Polynomial h = Polynomial::from_sorted(ring_, std::move(terms));
      // a lower-degree new row can divide a later one only in the non-homogeneous case
      if (!homogeneous_) {
        h = reduce_against_active(h);
        if (h.is_zero()) continue;
        h = h.monic();
      }
      long sug = weighted_sugar(h);
      insert(std::move(h), sug);
    }
  }

  GroebnerBasis finish() {
    std::vector<Polynomial> g;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) g.push_back(basis_[k]);
    const auto& ord = ring_->order();
    std::sort(g.begin(), g.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.greater(b.leading_monomial(), a.leading_monomial());
    });
    if (!g.empty() && g.front().is_constant()) return GroebnerBasis(ring_, {Polynomial::constant(ring_, 1)}, truncated_);
    std::vector<Polynomial> out;
    for (auto& f : g) {
      std::vector<const Polynomial*> red;
      for (const auto& h : out) red.push_back(&h);
      Polynomial lead = Polynomial::from_sorted(ring_, {f.leading()});
      Polynomial tail = Polynomial::from_sorted(ring_, {f.terms().begin() + 1, f.terms().end()});
      out.push_back((lead + reduce_full(tail, red)).monic());
    }
    return GroebnerBasis(ring_, std::move(out), truncated_);
  }

  RingPtr ring_;
  GbOptions opts_;
  PrimeField F_;
  bool homogeneous_ = true;
  bool degree_compatible_normal_ = true;
  bool truncated_ = false;
  std::vector<Polynomial> basis_;
  std::vector<long> sugar_;
  std::vector<char> active_;
  std::vector<std::uint64_t> masks_;
  std::vector<Pair> pairs_;
  bool pairs_dirty_ = false;
  std::vector<Polynomial> pending_;
  GbStats stats_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal generated by `gens` under `ring`'s order.
/// Zero generators are ignored.
inline GroebnerBasis buchberger(const RingPtr& ring, const std::vector<Polynomial>& gens, const GbOptions& opts = {},
                                GbStats* stats = nullptr) {
  detail::GbEngine engine(ring, opts);
  GroebnerBasis gb = engine.run(gens);
  if (stats) *stats = engine.stats();
  return gb;
}

/// Remainder of f modulo G; zero iff f lies in the ideal.
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) {
  if (f.ring()->nvars() != G.ring()->nvars() || !(f.ring()->field() == G.ring()->field())) throw RingMismatch();
  std::vector<const Polynomial*> red;
  for (const auto& g : G.elements()) red.push_back(&g);
  return detail::reduce_full(f.in_ring(G.ring()), red);
}

/// Finitely generated ideal with a write-once cache of reduced Groebner bases per order.
class Ideal {
public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
    for (auto& g : gens) {
      if (g.ring()->nvars() != ring_->nvars()) throw RingMismatch();
      if (!g.is_zero()) gens_.push_back(g.in_ring(ring_));
    }
  }
  static Ideal parse(const RingPtr& ring, const std::vector<std::string>& gens) {
    std::vector<Polynomial> v;
    for (const auto& s : gens) v.push_back(parse_polynomial(s, ring));
    return Ideal(ring, std::move(v));
  }

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_homogeneous() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_homogeneous(); });
  }

  /// Reduced Groebner basis under `order`; full (untruncated) results are cached.
  GroebnerBasis groebner_basis(const MonomialOrder& order, const GbOptions& opts = {}) const {
    const std::string key = order.describe();
    const bool cacheable = !opts.degree_bound;
    if (cacheable) {
      std::lock_guard lock(cache_->mutex);
      auto it = cache_->bases.find(key);
      if (it != cache_->bases.end()) return it->second;
    }
    GroebnerBasis gb = buchberger(with_order(ring_, order), gens_, opts);
    if (cacheable) {
      std::lock_guard lock(cache_->mutex);
      cache_->bases.emplace(key, gb);
    }
    return gb;
  }
  GroebnerBasis groebner_basis(const GbOptions& opts = {}) const { return groebner_basis(ring_->order(), opts); }

  /// Records a known reduced basis of this ideal (same generators' span).
  void seed_basis(const GroebnerBasis& gb) const {
    if (gb.truncated()) return;
    std::lock_guard lock(cache_->mutex);
    cache_->bases.emplace(gb.order().describe(), gb);
  }

  bool contains(const Polynomial& f, const GbOptions& opts = {}) const {
    return normal_form(f, groebner_basis(opts)).is_zero();
  }

  /// Generators re-expressed in another ring with the same variables.
  Ideal in_ring(const RingPtr& ring) const {
    std::vector<Polynomial> v;
    for (const auto& g : gens_) v.push_back(g.in_ring(ring));
    return Ideal(ring, std::move(v));
  }

private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, GroebnerBasis> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

inline GroebnerBasis buchberger(const Ideal& I, const MonomialOrder& order, const GbOptions& opts = {}) {
  return I.groebner_basis(order, opts);
}

/// Same ideal iff the reduced bases coincide.
inline bool ideal_equal(const Ideal& I, const Ideal& J, const MonomialOrder& order, const GbOptions& opts = {}) {
  if (I.ring()->nvars() != J.ring()->nvars()) throw RingMismatch();
  return I.groebner_basis(order, opts) == J.groebner_basis(order, opts);
}

}  // namespace secantlab

#endif  // SECANTLAB_GROEBNER_HPP
