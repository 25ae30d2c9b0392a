#ifndef SECANTLAB_CURVES_HPP
#define SECANTLAB_CURVES_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "secantlab/ideal_ops.hpp"

namespace secantlab {

namespace detail {

using UniPoly = std::vector<Coeff>;  // lowest degree first

inline void trim(UniPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline UniPoly uni_mod(UniPoly a, const UniPoly& b, const PrimeField& F) {
  Coeff inv = F.inv(b.back());
  while (a.size() >= b.size()) {
    Coeff q = F.mul(a.back(), inv);
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = F.sub(a[shift + i], F.mul(q, b[i]));
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

inline UniPoly uni_gcd(UniPoly a, UniPoly b, const PrimeField& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = uni_mod(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Coeff uni_eval(const UniPoly& f, Coeff x, const PrimeField& F) {
  Coeff acc = 0;
  for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
  return acc;
}

}  // namespace detail

/// An affine point (x, y) of a curve model, or its point at infinity. Genus-0
/// points use x as the affine parameter.
struct CurvePoint {
  Coeff x = 0, y = 0;
  bool infinity = false;

  friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

/// Plane model of a smooth curve of genus 0, 1 or 2 with one point at infinity.
///
/// g = 1: y^2 + a1 xy + a3 y - x^3 - a2 x^2 - a4 x - a6, nonzero discriminant.
/// g = 2: y^2 - f(x), deg f = 5, f squarefree.
class CurveModel {
public:
  static CurveModel rational(std::uint64_t p = kDefaultPrime) { return CurveModel(0, PrimeField(p)); }

  static CurveModel elliptic(std::uint64_t p, std::int64_t a1, std::int64_t a2, std::int64_t a3, std::int64_t a4,
                             std::int64_t a6) {
    CurveModel c(1, PrimeField(p));
    const PrimeField& F = c.field_;
    c.a_ = {F.reduce(a1), F.reduce(a2), F.reduce(a3), F.reduce(a4), F.reduce(a6)};
    if (c.discriminant() == 0) throw InvalidCurve("singular Weierstrass equation (zero discriminant)");
    c.build_equation();
    return c;
  }

  /// y^2 = f(x) with f given lowest coefficient first.
  static CurveModel hyperelliptic(std::uint64_t p, const std::vector<std::int64_t>& f) {
    CurveModel c(2, PrimeField(p));
    const PrimeField& F = c.field_;
    for (auto v : f) c.f_.push_back(F.reduce(v));
    detail::trim(c.f_);
    if (c.f_.size() == 7) throw InvalidCurve("even-degree model rejected (deg f = 6 has two points at infinity)");
    if (c.f_.size() != 6) throw InvalidCurve("genus-2 model needs deg f = 5");
    detail::UniPoly df;
    for (std::size_t i = 1; i < c.f_.size(); ++i) df.push_back(F.mul(static_cast<Coeff>(i % F.characteristic()), c.f_[i]));
    if (detail::uni_gcd(c.f_, df, F).size() != 1) throw InvalidCurve("f is not squarefree");
    c.build_equation();
    return c;
  }

  /// Reads a plane equation in x and y ("lhs = rhs" allowed) of the shape for `genus`.
  static CurveModel from_equation(int genus, std::uint64_t p, const std::string& text) {
    if (genus == 0) return rational(p);
    auto R = make_ring({"x", "y"}, p);
    Polynomial w(R);
    if (auto eq = text.find('='); eq != std::string::npos)
      w = parse_polynomial(text.substr(0, eq), R) - parse_polynomial(text.substr(eq + 1), R);
    else
      w = parse_polynomial(text, R);
    const PrimeField& F = R->field();
    auto co = [&](unsigned a, unsigned b) { return w.coefficient(Monomial{a, b}); };
    Coeff y2 = co(0, 2);
    if (!y2) throw InvalidCurve("equation needs a y^2 term");
    w = w.scaled(F.inv(y2));
    for (const auto& t : w.terms()) {
      unsigned a = t.mono[0], b = t.mono[1];
      bool ok = (b == 2 && a == 0) || (b == 0) || (genus == 1 && b == 1 && a <= 1);
      if (!ok) throw InvalidCurve("term " + monomial_to_string(t.mono, *R) + " not allowed in a genus-" +
                                  std::to_string(genus) + " model");
    }
    if (genus == 1) {
      if (w.coefficient(Monomial{3, 0}) != F.neg(1)) throw InvalidCurve("Weierstrass form needs y^2 - x^3 + ...");
      for (const auto& t : w.terms())
        if (t.mono[1] == 0 && t.mono[0] > 3) throw InvalidCurve("x-degree above 3 in a genus-1 model");
      auto neg = [&](Coeff c) { return static_cast<std::int64_t>(F.neg(c)); };
      return elliptic(p, co(1, 1), neg(co(2, 0)), co(0, 1), neg(co(1, 0)), neg(co(0, 0)));
    }
    if (genus == 2) {
      std::vector<std::int64_t> f;
      for (unsigned i = 0; i <= 8; ++i) f.push_back(F.neg(co(i, 0)));
      return hyperelliptic(p, f);
    }
    throw InvalidCurve("genus must be 0, 1 or 2");
  }

  int genus() const noexcept { return genus_; }
  const PrimeField& field() const noexcept { return field_; }
  /// Plane equation in k[x, y]; the zero polynomial for genus 0.
  const Polynomial& equation() const noexcept { return equation_; }
  /// Pole order of y at infinity (3 or 5); x has pole order 2.
  unsigned y_weight() const noexcept { return genus_ == 2 ? 5 : 3; }

  Coeff discriminant() const {
    if (genus_ != 1) throw InvalidArgument("discriminant is defined for Weierstrass models");
    const PrimeField& F = field_;
    auto m = [&](std::initializer_list<Coeff> xs) {
      Coeff r = 1;
      for (Coeff x : xs) r = F.mul(r, x);
      return r;
    };
    Coeff a1 = a_[0], a2 = a_[1], a3 = a_[2], a4 = a_[3], a6 = a_[4];
    Coeff b2 = F.add(m({a1, a1}), m({4, a2}));
    Coeff b4 = F.add(m({2, a4}), m({a1, a3}));
    Coeff b6 = F.add(m({a3, a3}), m({4, a6}));
    Coeff b8 = F.sub(F.add(F.add(m({a1, a1, a6}), m({4, a2, a6})), F.sub(m({a2, a3, a3}), m({a1, a3, a4}))), m({a4, a4}));
    Coeff d = F.neg(m({b2, b2, b8}));
    d = F.sub(d, m({8, b4, b4, b4}));
    d = F.sub(d, m({27, b6, b6}));
    return F.add(d, m({9, b2, b4, b6}));
  }

  bool on_curve(const CurvePoint& P) const {
    if (P.infinity || genus_ == 0) return true;
    std::vector<Coeff> v{P.x, P.y};
    return equation_.evaluate(v) == 0;
  }

  /// y-values over x (0, 1 or 2 of them).
  std::vector<Coeff> fibre(Coeff x) const {
    const PrimeField& F = field_;
    if (genus_ == 2) {
      Coeff v = detail::uni_eval(f_, x, F);
      auto r = F.sqrt(v);
      if (!r) return {};
      if (*r == 0) return {0};
      return {*r, F.neg(*r)};
    }
    // y^2 + b y - c = 0 with b = a1 x + a3, c = x^3 + a2 x^2 + a4 x + a6
    Coeff b = F.add(F.mul(a_[0], x), a_[2]);
    Coeff c = F.add(F.add(F.mul(F.mul(x, x), F.add(x, a_[1])), F.mul(a_[3], x)), a_[4]);
    Coeff disc = F.add(F.mul(b, b), F.mul(4, c));
    auto r = F.sqrt(disc);
    if (!r) return {};
    Coeff half = F.inv(2);
    Coeff y1 = F.mul(F.sub(*r, b), half), y2 = F.mul(F.sub(F.neg(*r), b), half);
    if (y1 == y2) return {y1};
    return {y1, y2};
  }

  /// `count` distinct affine points, drawn deterministically from `seed`.
  std::vector<CurvePoint> sample_points(std::size_t count, std::uint64_t seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint64_t> dx(0, field_.characteristic() - 1);
    std::set<CurvePoint> seen;
    std::vector<CurvePoint> out;
    std::size_t attempts = 0;
    while (out.size() < count) {
      if (++attempts > 64 * count + 4 * field_.characteristic())
        throw InvalidArgument("not enough rational points on the curve");
      Coeff x = static_cast<Coeff>(dx(rng));
      CurvePoint P;
      if (genus_ == 0) {
        P.x = x;
      } else {
        auto ys = fibre(x);
        if (ys.empty()) continue;
        P = {x, ys[rng() % ys.size()], false};
      }
      if (seen.insert(P).second) out.push_back(P);
    }
    return out;
  }

  std::string describe() const {
    if (genus_ == 0) return "P^1";
    return equation_.to_string() + " = 0";
  }

private:
  CurveModel(int g, PrimeField F) : genus_(g), field_(F), equation_(make_ring({"x", "y"}, F.characteristic())) {}

  void build_equation() {
    auto R = equation_.ring();
    auto P = [&](const char* s) { return parse_polynomial(s, R); };
    if (genus_ == 1) {
      equation_ = P("y^2") + P("x*y").scaled(a_[0]) + P("y").scaled(a_[2]) - P("x^3") - P("x^2").scaled(a_[1]) -
                  P("x").scaled(a_[3]) - Polynomial::constant(R, a_[4]);
    } else {
      Polynomial f(R);
      for (std::size_t i = 0; i < f_.size(); ++i) f += Polynomial::term(R, Monomial{static_cast<unsigned>(i), 0}, f_[i]);
      equation_ = P("y^2") - f;
    }
  }

  int genus_;
  PrimeField field_;
  std::array<Coeff, 5> a_{};
  detail::UniPoly f_;
  Polynomial equation_;
};

/// A basis function x^a y^b of H^0(O(d·∞)) with its pole order at infinity.
struct BasisMonomial {
  unsigned x_exp = 0, y_exp = 0;
  unsigned pole = 0;
};

/// Monomial basis of H^0(C, O(d·∞)), by increasing pole order. Genus 0 uses the
/// degree-d monomials s^(d-i) t^i, recorded as x_exp = i.
inline std::vector<BasisMonomial> rr_basis(const CurveModel& C, int d) {
  const int g = C.genus();
  if (d < 2 * g + 1) throw DegreeTooSmall(d, 2 * g + 1);
  std::vector<BasisMonomial> out;
  if (g == 0) {
    for (int i = 0; i <= d; ++i) out.push_back({static_cast<unsigned>(i), 0, static_cast<unsigned>(i)});
    return out;
  }
  const unsigned wy = C.y_weight();
  for (unsigned pole = 0; pole <= static_cast<unsigned>(d); ++pole) {
    if (pole % 2 == 0)
      out.push_back({pole / 2, 0, pole});
    else if (pole >= wy)
      out.push_back({(pole - wy) / 2, 1, pole});
  }
  return out;
}

struct CurveEmbedding {
  CurveModel model;
  int d = 0;
  std::vector<BasisMonomial> basis;
  Ideal ideal;  // in z0..zr, standard grading

  int r() const noexcept { return static_cast<int>(basis.size()) - 1; }

  /// Image of a curve point in P^r (unnormalized).
  std::vector<Coeff> point(const CurvePoint& P) const {
    const PrimeField& F = model.field();
    std::vector<Coeff> z(basis.size(), 0);
    if (P.infinity) {
      z.back() = 1;  // the unique basis function of top pole order dominates
      return z;
    }
    for (std::size_t i = 0; i < basis.size(); ++i)
      z[i] = F.mul(F.pow(P.x, basis[i].x_exp), F.pow(P.y, basis[i].y_exp));
    return z;
  }
};

/// Hankel 2x2 minors in z0..zd.
inline CurveEmbedding rational_normal_curve(int d, std::uint64_t p = kDefaultPrime) {
  if (d < 1) throw DegreeTooSmall(d, 1);
  CurveModel C = CurveModel::rational(p);
  auto R = make_ring(indexed_names("z", static_cast<std::size_t>(d) + 1), p);
  std::vector<Polynomial> g;
  auto z = [&](int i) { return Polynomial::variable(R, static_cast<std::size_t>(i)); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) g.push_back(z(i) * z(j + 1) - z(i + 1) * z(j));
  return CurveEmbedding{C, d, rr_basis(C, d), Ideal(R, std::move(g))};
}

/// Embedding by |d·∞|: eliminate x, y, t from the weighted-homogenized curve
/// equation and z_i - t^(d - pole_i)·m_i(x, y), with weights x:2, y:3 or 5, t:1, z:d.
inline CurveEmbedding embed(const CurveModel& C, int d, const GbOptions& opts = f4_options()) {
  if (C.genus() == 0) {
    if (d < 1) throw DegreeTooSmall(d, 1);
    return rational_normal_curve(d, C.field().characteristic());
  }
  auto basis = rr_basis(C, d);
  const std::size_t nz = basis.size();
  const unsigned wy = C.y_weight();
  const unsigned top = 2 * wy;  // weighted degree of y^2
  std::vector<std::string> names{"x", "y", "t"};
  auto zn = indexed_names("z", nz);
  names.insert(names.end(), zn.begin(), zn.end());
  std::vector<int> w{2, static_cast<int>(wy), 1};
  w.insert(w.end(), nz, d);
  const std::uint64_t p = C.field().characteristic();
  auto E = std::make_shared<const PolyRing>(names, C.field(), MonomialOrder::block_elim(3), w);
  std::vector<Polynomial> gens;
  {
    std::vector<Term> t;
    for (const auto& term : C.equation().terms()) {
      Monomial m(E->nvars());
      unsigned a = term.mono[0], b = term.mono[1];
      m.set(0, a);
      m.set(1, b);
      m.set(2, top - 2 * a - wy * b);
      t.push_back({m, term.coeff});
    }
    gens.push_back(Polynomial(E, std::move(t)));
  }
  for (std::size_t i = 0; i < nz; ++i) {
    Monomial m(E->nvars());
    m.set(0, basis[i].x_exp);
    m.set(1, basis[i].y_exp);
    m.set(2, static_cast<unsigned>(d) - basis[i].pole);
    Monomial zi(E->nvars());
    zi.set(3 + i, 1);
    gens.push_back(Polynomial(E, {{zi, 1}, {m, C.field().neg(1)}}));
  }
  Ideal J = eliminate_vars(Ideal(E, gens), {0, 1, 2}, opts);
  auto Z = make_ring(zn, p);
  std::vector<Polynomial> zg;
  for (const auto& g : J.generators()) zg.push_back(Polynomial(Z, g.terms()));
  Ideal I(Z, std::move(zg));
  return CurveEmbedding{C, d, std::move(basis), minimal_generators(I, opts)};
}

/// A point of Σ_k: Σ c_j ν(P_j) for k+1 distinct affine curve points, paired
/// with the ideal it must lie on.
inline PointedIdeal point_on_secant(const CurveEmbedding& emb, int k, const std::vector<CurvePoint>& pts,
                                    const std::vector<Coeff>& coeffs, const Ideal& secant_ideal) {
  if (k < 0 || pts.size() != static_cast<std::size_t>(k) + 1 || coeffs.size() != pts.size())
    throw InvalidArgument("point_on_secant needs k+1 points and k+1 coefficients");
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw DuplicatePoints();
  const PrimeField& F = emb.model.field();
  std::vector<Coeff> x(emb.basis.size(), 0);
  for (std::size_t j = 0; j < pts.size(); ++j) {
    if (pts[j].infinity) throw InvalidArgument("secant points must be affine");
    if (!emb.model.on_curve(pts[j])) throw PointNotOnVariety("curve point does not satisfy the equation");
    Coeff c = static_cast<Coeff>(coeffs[j] % F.characteristic());
    if (!c) throw InvalidArgument("secant coefficients must be nonzero");
    auto z = emb.point(pts[j]);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = F.add(x[i], F.mul(c, z[i]));
  }
  return PointedIdeal(secant_ideal, x);
}

/// A curve description: model plus line-bundle degree.
struct CurveSpec {
  CurveModel model = CurveModel::rational();
  int degree = 0;
};

/// Parses "genus: G", "field: P", "equation: ...", "degree: D" lines; '#' starts a comment.
/// `prime`, when given, replaces the file's field line.
inline CurveSpec parse_curve_file(const std::string& text, std::optional<std::uint64_t> prime = std::nullopt) {
  std::optional<int> genus, degree;
  std::uint64_t p = kDefaultPrime;
  std::optional<std::string> equation;
  std::istringstream in(text);
  std::string line;
  std::size_t offset = 0;
  while (std::getline(in, line)) {
    std::size_t here = offset;
    offset += line.size() + 1;
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(here, "expected 'key: value'");
    std::string key = line.substr(first, colon - first);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string value = line.substr(colon + 1);
    auto vb = value.find_first_not_of(" \t");
    auto ve = value.find_last_not_of(" \t\r");
    value = vb == std::string::npos ? "" : value.substr(vb, ve - vb + 1);
    auto number = [&]() -> std::int64_t {
      try {
        std::size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size()) throw std::invalid_argument("trailing");
        return v;
      } catch (const std::exception&) {
        throw ParseError(here + colon + 1, "expected an integer for '" + key + "'");
      }
    };
    if (key == "genus")
      genus = static_cast<int>(number());
    else if (key == "field")
      p = static_cast<std::uint64_t>(number());
    else if (key == "degree")
      degree = static_cast<int>(number());
    else if (key == "equation")
      equation = value;
    else
      throw ParseError(here + first, "unknown key '" + key + "'");
  }
  if (!genus) throw InvalidCurve("curve file needs a 'genus' line");
  if (!degree) throw InvalidCurve("curve file needs a 'degree' line");
  if (*genus < 0 || *genus > 2) throw InvalidCurve("genus must be 0, 1 or 2");
  if (*genus > 0 && !equation) throw InvalidCurve("curve file needs an 'equation' line");
  if (prime) p = *prime;
  CurveSpec spec;
  spec.model = *genus == 0 ? CurveModel::rational(p) : CurveModel::from_equation(*genus, p, *equation);
  spec.degree = *degree;
  return spec;
}

}  // namespace secantlab

#endif  // SECANTLAB_CURVES_HPP
