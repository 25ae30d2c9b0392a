#ifndef SECANTLAB_IDEAL_OPS_HPP
#define SECANTLAB_IDEAL_OPS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "secantlab/groebner.hpp"
#include "secantlab/hilbert.hpp"

namespace secantlab {

namespace detail {

/// A variable name not clashing with any in `taken`.
inline std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "_";
  return base;
}

inline std::vector<std::string> fresh_block(const std::vector<std::string>& taken, const std::string& prefix,
                                            std::size_t n) {
  std::string p = prefix;
  for (;;) {
    auto names = indexed_names(p, n);
    bool clash = false;
    for (const auto& s : names)
      if (std::find(taken.begin(), taken.end(), s) != taken.end()) clash = true;
    if (!clash) return names;
    p += "_";
  }
}

inline RingPtr extended_ring(const std::vector<std::string>& front, const RingPtr& base, MonomialOrder order,
                             std::vector<int> front_weights = {}) {
  std::vector<std::string> names = front;
  names.insert(names.end(), base->names().begin(), base->names().end());
  if (front_weights.empty()) front_weights.assign(front.size(), 1);
  std::vector<int> w = front_weights;
  w.insert(w.end(), base->weights().begin(), base->weights().end());
  return std::make_shared<const PolyRing>(std::move(names), base->field(), std::move(order), std::move(w));
}

/// Variable i of `base` sits at position offset + i of the extended ring.
inline std::vector<std::size_t> shifted_map(std::size_t n, std::size_t offset) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = offset + i;
  return m;
}

/// Elements of G free of the first `block` variables, mapped into `target`
/// (whose variables are the remaining ones, in order).
inline std::vector<Polynomial> drop_block(const GroebnerBasis& G, std::size_t block, const RingPtr& target) {
  std::vector<Polynomial> out;
  const std::size_t n = G.ring()->nvars();
  std::vector<std::size_t> map(n, 0);
  for (std::size_t i = block; i < n; ++i) map[i] = i - block;
  for (const auto& g : G.elements()) {
    bool free = true;
    for (const auto& t : g.terms()) {
      for (std::size_t i = 0; i < block && free; ++i)
        if (t.mono[i]) free = false;
      if (!free) break;
    }
    if (free) out.push_back(g.map_variables(target, map));
  }
  return out;
}

inline Polynomial linear_form(const RingPtr& R, const std::vector<Coeff>& c) {
  std::vector<Term> t;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i]) t.push_back({R->variable(i), c[i]});
  return Polynomial(R, std::move(t));
}

inline std::vector<Coeff> random_coefficients(const PrimeField& F, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(1, F.characteristic() - 1);
  std::vector<Coeff> c(n);
  for (auto& x : c) x = static_cast<Coeff>(d(rng));
  return c;
}

inline Ideal with_gb_generators(const Ideal& I, const GbOptions& opts) {
  GroebnerBasis G = I.groebner_basis(opts);
  return Ideal(I.ring(), G.elements());
}

}  // namespace detail

/// I ∩ k[remaining variables], computed with a block elimination order. The
/// result lives in a ring on the remaining variables (grevlex, or lex when I's
/// ring is lex), with the grading weights restricted.
inline Ideal eliminate_vars(const Ideal& I, const std::vector<std::size_t>& drop, const GbOptions& opts = {}) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  std::vector<bool> dropped(n, false);
  for (auto v : drop) {
    if (v >= n) throw InvalidArgument("elimination variable out of range");
    dropped[v] = true;
  }
  const std::size_t nd = static_cast<std::size_t>(std::count(dropped.begin(), dropped.end(), true));
  if (nd == 0) return I;
  std::vector<std::string> names, kept;
  std::vector<int> w, kept_w;
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    if (dropped[i]) {
      perm[i] = names.size();
      names.push_back(R->name(i));
      w.push_back(R->weights()[i]);
    }
  for (std::size_t i = 0; i < n; ++i)
    if (!dropped[i]) {
      perm[i] = names.size();
      names.push_back(R->name(i));
      w.push_back(R->weights()[i]);
      kept.push_back(R->name(i));
      kept_w.push_back(R->weights()[i]);
    }
  auto E = std::make_shared<const PolyRing>(names, R->field(), MonomialOrder::block_elim(nd), w);
  MonomialOrder kept_order =
      R->order().kind() == MonomialOrder::Kind::lex ? MonomialOrder::lex() : MonomialOrder::grevlex();
  auto K = std::make_shared<const PolyRing>(kept, R->field(), kept_order, kept_w);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_variables(E, perm));
  GroebnerBasis G = buchberger(E, gens, opts);
  return Ideal(K, detail::drop_block(G, nd, K));
}

inline Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop, const GbOptions& opts = {}) {
  std::vector<std::size_t> idx;
  for (const auto& s : drop) {
    auto i = I.ring()->index_of(s);
    if (!i) throw UnknownVariable(s);
    idx.push_back(*i);
  }
  return eliminate_vars(I, idx, opts);
}

/// (I : f^∞) via a Rabinowitsch variable w: eliminate w from I + (w f - 1).
inline Ideal saturate(const Ideal& I, const Polynomial& f, const GbOptions& opts = {}) {
  if (f.is_zero()) throw ZeroPolynomial();
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  std::string w = detail::fresh_name(R->names(), "w");
  RingPtr E = detail::extended_ring({w}, R, MonomialOrder::block_elim(1));
  auto map = detail::shifted_map(n, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_variables(E, map));
  gens.push_back(Polynomial::variable(E, 0) * f.map_variables(E, map) - Polynomial::constant(E, 1));
  GroebnerBasis G = buchberger(E, gens, opts);
  return Ideal(R, detail::drop_block(G, 1, R));
}

/// (I : ℓ^∞) for homogeneous I and a nonzero linear form ℓ. After a linear change
/// of coordinates making ℓ the last variable, a grevlex basis divided by the
/// largest power of that variable is a basis of the saturation.
inline Ideal saturate_linear(const Ideal& I, const Polynomial& ell, const GbOptions& opts = {}) {
  const RingPtr& R = I.ring();
  const std::size_t n = R->nvars();
  if (ell.is_zero() || ell.total_degree() != 1 || !ell.is_homogeneous())
    throw InvalidArgument("saturation needs a nonzero linear form");
  if (!I.is_homogeneous()) throw InvalidArgument("linear-form saturation needs a homogeneous ideal");
  if (I.is_zero()) return I;
  const PrimeField& F = R->field();
  std::vector<Coeff> a(n, 0);
  for (const auto& t : ell.terms())
    for (std::size_t i = 0; i < n; ++i)
      if (t.mono[i]) a[i] = t.coeff;
  std::size_t j = n;
  while (a[j - 1] == 0) --j;
  --j;
  // new ring: all variables except j, then j last (standing for ℓ)
  std::vector<std::string> names;
  std::vector<int> w;
  std::vector<std::size_t> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    if (i != j) {
      pos[i] = names.size();
      names.push_back(R->name(i));
      w.push_back(R->weights()[i]);
    }
  pos[j] = n - 1;
  names.push_back(R->name(j));
  w.push_back(R->weights()[j]);
  auto T = std::make_shared<const PolyRing>(names, F, MonomialOrder::grevlex(), w);
  // x_j = (y_last - sum_{i != j} a_i y_i) / a_j
  const Coeff aj_inv = F.inv(a[j]);
  std::vector<Polynomial> fwd(n, Polynomial(T));
  for (std::size_t i = 0; i < n; ++i) fwd[i] = Polynomial::variable(T, pos[i]);
  {
    std::vector<Term> t;
    t.push_back({T->variable(n - 1), aj_inv});
    for (std::size_t i = 0; i < n; ++i)
      if (i != j && a[i]) t.push_back({T->variable(pos[i]), F.neg(F.mul(a[i], aj_inv))});
    fwd[j] = Polynomial(T, std::move(t));
  }
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.substitute(fwd));
  GroebnerBasis G = buchberger(T, gens, opts);
  std::vector<Polynomial> back(n, Polynomial(R));
  for (std::size_t i = 0; i < n; ++i) back[pos[i]] = Polynomial::variable(R, i);
  back[n - 1] = ell;
  std::vector<Polynomial> out;
  for (const auto& g : G.elements()) {
    unsigned e = ~0u;
    for (const auto& t : g.terms()) e = std::min(e, t.mono[n - 1]);
    Monomial div(n);
    div.set(n - 1, e);
    std::vector<Term> q;
    for (const auto& t : g.terms()) q.push_back({div.quotient_of(t.mono), t.coeff});
    out.push_back(Polynomial(T, std::move(q)).substitute(back));
  }
  return Ideal(R, std::move(out));
}

/// I ∩ J: eliminate t from t·I + (1 - t)·J.
inline Ideal intersect(const Ideal& I, const Ideal& J, const GbOptions& opts = {}) {
  const RingPtr& R = I.ring();
  if (J.ring()->nvars() != R->nvars() || !(J.ring()->field() == R->field())) throw RingMismatch();
  if (I.is_zero() || J.is_zero()) return Ideal(R, {});
  std::string t = detail::fresh_name(R->names(), "t");
  RingPtr E = detail::extended_ring({t}, R, MonomialOrder::block_elim(1));
  auto map = detail::shifted_map(R->nvars(), 1);
  Polynomial tv = Polynomial::variable(E, 0);
  Polynomial one_minus = Polynomial::constant(E, 1) - tv;
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(tv * g.map_variables(E, map));
  for (const auto& g : J.generators()) gens.push_back(one_minus * g.in_ring(R).map_variables(E, map));
  GroebnerBasis G = buchberger(E, gens, opts);
  return Ideal(R, detail::drop_block(G, 1, R));
}

/// (I : m^∞) for the irrelevant ideal m, as the intersection of all (I : x_i^∞).
inline Ideal saturate_irrelevant(const Ideal& I, const GbOptions& opts = {}) {
  const RingPtr& R = I.ring();
  std::optional<Ideal> acc;
  for (std::size_t i = 0; i < R->nvars(); ++i) {
    Ideal s = saturate_linear(I, Polynomial::variable(R, i), opts);
    acc = acc ? intersect(*acc, s, opts) : s;
  }
  return acc ? *acc : I;
}

/// Minimal homogeneous generators, chosen greedily degree by degree from the
/// reduced basis under I's ring order.
inline Ideal minimal_generators(const Ideal& I, const GbOptions& opts = f4_options()) {
  if (!I.is_homogeneous()) throw InvalidArgument("minimal generators need a homogeneous ideal");
  GroebnerBasis G = I.groebner_basis(opts);
  if (G.is_unit()) return Ideal(I.ring(), G.elements());
  std::vector<Polynomial> cand = G.elements();
  std::stable_sort(cand.begin(), cand.end(), [&](const Polynomial& a, const Polynomial& b) {
    return a.max_weighted_degree() < b.max_weighted_degree();
  });
  std::vector<Polynomial> kept;
  std::optional<GroebnerBasis> sub;
  long sub_bound = -1;
  for (const auto& g : cand) {
    long d = g.max_weighted_degree();
    if (!kept.empty() && sub_bound != d) {
      GbOptions o = opts;
      o.hilbert_numerator.reset();
      o.degree_bound = d;
      sub = buchberger(I.ring(), kept, o);
      sub_bound = d;
    }
    if (kept.empty() || !normal_form(g, *sub).is_zero()) {
      kept.push_back(g);
      sub_bound = -1;
    }
  }
  Ideal out(I.ring(), std::move(kept));
  if (G.ring() == I.ring()) out.seed_basis(G);
  return out;
}

/// A secant variety request: Σ_k of the curve cut out by `base_ideal` in P^r.
struct SecantSpec {
  int k = 0;
  Ideal base_ideal;

  std::size_t ambient_dim() const { return base_ideal.ring()->nvars() - 1; }
};

struct JoinOptions {
  enum class Layout {
    iterated,    // Σ_j = Join(Σ_{j-1}, C), one pair of blocks at a time
    all_blocks,  // all k+1 point blocks in a single elimination
  };
  Layout layout = Layout::iterated;
  /// Replace the double linear-form saturation by the intersection over all x_i.
  bool full_saturation = false;
  std::uint64_t seed = 20231;
  GbOptions gb = f4_options();
  /// Degree bound for every elimination; the result is then correct only up to it.
  std::optional<long> degree_bound;
};

namespace detail {

inline IntPoly numerator_of(const Ideal& I, const GbOptions& opts) {
  if (I.is_zero()) return {1};
  GbOptions o = opts;
  o.hilbert_numerator.reset();
  o.degree_bound.reset();
  return monomial_hilbert_numerator(I.groebner_basis(o).leading_monomials(), I.ring()->nvars());
}

/// Ideal of the join of the cones over V(A) and the blocks V(B_1), ..., V(B_m):
/// impose A on the first y block, B_j on the others, and B_last(x - sum y).
inline Ideal join_eliminate(const Ideal& A, const std::vector<const Ideal*>& rest, const JoinOptions& jo) {
  const RingPtr& R = A.ring();
  const std::size_t n = R->nvars();
  const std::size_t blocks = rest.size();  // y blocks: A, rest[0..blocks-2]; x carries rest.back()
  std::vector<std::string> front;
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<std::string> taken = R->names();
    taken.insert(taken.end(), front.begin(), front.end());
    auto blk = fresh_block(taken, "y" + std::to_string(b + 1) + "_", n);
    front.insert(front.end(), blk.begin(), blk.end());
  }
  const std::size_t ny = blocks * n;
  RingPtr E = extended_ring(front, R, MonomialOrder::block_elim(ny));
  std::vector<Polynomial> gens;
  auto block_vars = [&](std::size_t b) { return shifted_map(n, b * n); };
  for (const auto& g : A.generators()) {
    auto m = block_vars(0);
    gens.push_back(g.map_variables(E, m));
  }
  for (std::size_t b = 1; b < blocks; ++b) {
    auto m = block_vars(b);
    for (const auto& g : rest[b - 1]->generators()) gens.push_back(g.in_ring(R).map_variables(E, m));
  }
  // last component: x - sum of the y blocks
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial v = Polynomial::variable(E, ny + i);
    for (std::size_t b = 0; b < blocks; ++b) v -= Polynomial::variable(E, b * n + i);
    images.push_back(v);
  }
  for (const auto& g : rest.back()->generators()) gens.push_back(g.in_ring(R).substitute(images));

  GbOptions o = jo.gb;
  o.degree_bound = jo.degree_bound;
  // the Hilbert series of the product of cones is the product of the factors'
  IntPoly num = numerator_of(A, jo.gb);
  for (const Ideal* J : rest) num = poly_mul(num, numerator_of(*J, jo.gb));
  o.hilbert_numerator = num;
  GroebnerBasis G = buchberger(E, gens, o);
  return Ideal(R, drop_block(G, ny, R));
}

}  // namespace detail

/// Homogeneous ideal of Σ_k; the zero ideal means Σ_k fills P^r.
inline Ideal secant_join(const SecantSpec& spec, const JoinOptions& jo = {}) {
  if (spec.k < 0) throw InvalidArgument("secant index must be non-negative");
  const Ideal& C = spec.base_ideal;
  if (!C.is_homogeneous() || !C.ring()->standard_grading())
    throw InvalidArgument("secant join needs a homogeneous base ideal in a standard-graded ring");
  const RingPtr& R = C.ring();
  if (spec.k == 0) return C;
  Ideal J(R, {});
  if (jo.layout == JoinOptions::Layout::iterated) {
    J = C;
    for (int step = 1; step <= spec.k && !J.is_zero(); ++step) J = detail::join_eliminate(J, {&C}, jo);
  } else {
    std::vector<const Ideal*> rest(static_cast<std::size_t>(spec.k), &C);
    J = detail::join_eliminate(C, rest, jo);
  }
  if (J.is_zero()) return J;
  GbOptions o = jo.gb;
  o.hilbert_numerator.reset();
  Ideal S(R, {});
  if (jo.full_saturation) {
    S = saturate_irrelevant(J, o);
  } else {
    std::mt19937_64 rng(jo.seed);
    Polynomial l1 = detail::linear_form(R, detail::random_coefficients(R->field(), R->nvars(), rng));
    Polynomial l2 = detail::linear_form(R, detail::random_coefficients(R->field(), R->nvars(), rng));
    Ideal s1 = saturate_linear(J, l1, o);
    Ideal s2 = saturate_linear(J, l2, o);
    S = ideal_equal(s1, s2, R->order(), o) ? s1 : saturate_irrelevant(J, o);
  }
  if (jo.degree_bound) return detail::with_gb_generators(S, o);
  return minimal_generators(S, o);
}

/// Polynomial determinant by cofactor expansion along the first row.
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& M) {
  const std::size_t n = M.size();
  if (n == 0) throw InvalidArgument("empty matrix");
  if (n == 1) return M[0][0];
  if (n == 2) return M[0][0] * M[1][1] - M[0][1] * M[1][0];
  Polynomial acc(M[0][0].ring());
  for (std::size_t c = 0; c < n; ++c) {
    if (M[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t cc = 0; cc < n; ++cc)
        if (cc != c) row.push_back(M[r][cc]);
      sub.push_back(std::move(row));
    }
    Polynomial t = M[0][c] * determinant(sub);
    acc = (c % 2) ? acc - t : acc + t;
  }
  return acc;
}

namespace detail {

inline void for_each_subset(std::size_t n, std::size_t c, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> s(c);
  for (std::size_t i = 0; i < c; ++i) s[i] = i;
  if (c > n) return;
  for (;;) {
    fn(s);
    std::size_t i = c;
    while (i > 0 && s[i - 1] == n - c + i - 1) --i;
    if (i == 0) return;
    ++s[i - 1];
    for (std::size_t k = i; k < c; ++k) s[k] = s[k - 1] + 1;
  }
}

}  // namespace detail

/// I plus all c×c minors of the Jacobian matrix of its generators.
inline Ideal jacobian_minors(const Ideal& I, std::size_t c) {
  if (c == 0) throw InvalidArgument("minor size must be positive");
  const RingPtr& R = I.ring();
  const auto& gens = I.generators();
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < R->nvars(); ++v) row.push_back(g.derivative(v));
    jac.push_back(std::move(row));
  }
  std::vector<Polynomial> out = gens;
  detail::for_each_subset(gens.size(), c, [&](const std::vector<std::size_t>& rows) {
    detail::for_each_subset(R->nvars(), c, [&](const std::vector<std::size_t>& cols) {
      std::vector<std::vector<Polynomial>> M;
      for (auto r : rows) {
        std::vector<Polynomial> row;
        for (auto cc : cols) row.push_back(jac[r][cc]);
        M.push_back(std::move(row));
      }
      Polynomial d = determinant(M);
      if (!d.is_zero()) out.push_back(d);
    });
  });
  return Ideal(R, std::move(out));
}

/// f ∈ √I iff 1 ∈ I + (w f - 1).
inline bool radical_membership(const Polynomial& f, const Ideal& I, const GbOptions& opts = {}) {
  if (f.is_zero()) throw ZeroPolynomial();
  const RingPtr& R = I.ring();
  std::string w = detail::fresh_name(R->names(), "w");
  RingPtr E = detail::extended_ring({w}, R, MonomialOrder::grevlex());
  auto map = detail::shifted_map(R->nvars(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.generators()) gens.push_back(g.map_variables(E, map));
  gens.push_back(Polynomial::variable(E, 0) * f.in_ring(R).map_variables(E, map) - Polynomial::constant(E, 1));
  return buchberger(E, gens, opts).is_unit();
}

/// An ideal with a point on its projective zero set, normalized so the last
/// nonzero coordinate is 1; that coordinate is the affine chart.
class PointedIdeal {
public:
  PointedIdeal(Ideal ideal, std::vector<Coeff> point) : ideal_(std::move(ideal)), point_(std::move(point)) {
    const RingPtr& R = ideal_.ring();
    if (point_.size() != R->nvars()) throw ArityMismatch(point_.size(), R->nvars());
    const PrimeField& F = R->field();
    for (auto& c : point_) c = static_cast<Coeff>(c % F.characteristic());
    std::size_t j = point_.size();
    while (j > 0 && point_[j - 1] == 0) --j;
    if (j == 0) throw InvalidArgument("the zero vector is not a projective point");
    chart_ = j - 1;
    Coeff s = F.inv(point_[chart_]);
    for (auto& c : point_) c = F.mul(c, s);
    for (const auto& g : ideal_.generators())
      if (g.evaluate(point_) != 0) throw PointNotOnVariety("generator " + g.to_string() + " does not vanish");
  }

  const Ideal& ideal() const noexcept { return ideal_; }
  const std::vector<Coeff>& point() const noexcept { return point_; }
  std::size_t chart() const noexcept { return chart_; }

private:
  Ideal ideal_;
  std::vector<Coeff> point_;
  std::size_t chart_ = 0;
};

struct TangentCone {
  Ideal cone;  // homogeneous, in the affine coordinates centred at the point
  std::int64_t multiplicity = 0;
};

/// Tangent cone and multiplicity at the point. Each generator f becomes
/// F(h, u) = f(u + p·h) with the chart coordinate replaced by h, which is the
/// homogenization of the translated affine equation. A basis under total degree,
/// then h-degree, then grevlex is a standard basis for the local degree order
/// after h = 1, so its leading forms generate the cone.
inline TangentCone tangent_cone_multiplicity(const PointedIdeal& P, const GbOptions& opts = f4_options()) {
  const RingPtr& R = P.ideal().ring();
  if (!R->standard_grading() || !P.ideal().is_homogeneous())
    throw InvalidArgument("tangent cones need a homogeneous ideal in a standard-graded ring");
  const std::size_t n = R->nvars();
  const std::size_t chart = P.chart();
  std::vector<std::string> unames;
  for (std::size_t i = 0; i < n; ++i)
    if (i != chart) unames.push_back(R->name(i));
  std::string h = detail::fresh_name(R->names(), "h");
  std::vector<std::string> tnames{h};
  tnames.insert(tnames.end(), unames.begin(), unames.end());
  std::vector<int> row_h(n, 0);
  row_h[0] = 1;
  auto T = std::make_shared<const PolyRing>(tnames, R->field(),
                                            MonomialOrder::weighted({std::vector<int>(n, 1), row_h}));
  auto U = make_ring(unames, R->field().characteristic());
  std::vector<Polynomial> img;
  for (std::size_t i = 0, u = 1; i < n; ++i) {
    if (i == chart) {
      img.push_back(Polynomial::variable(T, 0));
      continue;
    }
    std::vector<Term> t{{T->variable(u), 1}};
    if (P.point()[i]) t.push_back({T->variable(0), P.point()[i]});
    img.push_back(Polynomial(T, std::move(t)));
    ++u;
  }
  std::vector<Polynomial> gens;
  for (const auto& g : P.ideal().generators()) gens.push_back(g.substitute(img));
  GroebnerBasis G = buchberger(T, gens, opts);
  std::vector<std::size_t> drop_h(n);
  for (std::size_t i = 1; i < n; ++i) drop_h[i] = i - 1;
  std::vector<Polynomial> forms;
  for (const auto& g : G.elements()) {
    unsigned top = g.leading_monomial()[0];
    std::vector<Term> t;
    for (const auto& term : g.terms())
      if (term.mono[0] == top) {
        Monomial m(n - 1);
        for (std::size_t i = 1; i < n; ++i) m.set(i - 1, term.mono[i]);
        t.push_back({m, term.coeff});
      }
    forms.push_back(Polynomial(U, std::move(t)));
  }
  TangentCone tc{Ideal(U, std::move(forms)), 0};
  tc.multiplicity = hilbert_data(tc.cone, opts).degree;
  return tc;
}

}  // namespace secantlab

#endif  // SECANTLAB_IDEAL_OPS_HPP
