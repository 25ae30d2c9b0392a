#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "secantlab/groebner.hpp"

using namespace secantlab;

namespace {

std::vector<Polynomial> P(const RingPtr& R, std::initializer_list<const char*> s) {
  std::vector<Polynomial> v;
  for (const char* x : s) v.push_back(parse_polynomial(x, R));
  return v;
}

GbOptions f4() {
  GbOptions o;
  o.strategy = GbOptions::Strategy::f4;
  return o;
}

Polynomial random_homogeneous(const RingPtr& R, std::mt19937_64& rng, unsigned deg, int nterms) {
  std::uniform_int_distribution<std::size_t> var(0, R->nvars() - 1);
  std::uniform_int_distribution<std::int64_t> co(1, R->field().characteristic() - 1);
  std::vector<Term> t;
  for (int k = 0; k < nterms; ++k) {
    Monomial m(R->nvars());
    for (unsigned d = 0; d < deg; ++d) {
      std::size_t v = var(rng);
      m.set(v, m[v] + 1);
    }
    t.push_back({m, static_cast<Coeff>(co(rng))});
  }
  return Polynomial(R, t);
}

}  // namespace

TEST(Buchberger, HandComputedLexExample) {
  auto R = make_ring({"x", "y"}, 32003, MonomialOrder::lex());
  GroebnerBasis G = buchberger(R, P(R, {"x^2 - y", "x*y - 1"}));
  ASSERT_EQ(G.size(), 2u);
  EXPECT_EQ(G.elements()[0], parse_polynomial("y^3 - 1", R));
  EXPECT_EQ(G.elements()[1], parse_polynomial("x - y^2", R));
  EXPECT_EQ(buchberger(R, P(R, {"x^2 - y", "x*y - 1"}), f4()), G);
}

TEST(Buchberger, TrivialCases) {
  auto R = make_ring({"x", "y"}, 32003);
  GroebnerBasis G = buchberger(R, P(R, {"x"}));
  ASSERT_EQ(G.size(), 1u);
  EXPECT_EQ(G.elements()[0], parse_polynomial("x", R));
  GroebnerBasis U = buchberger(R, P(R, {"x", "x + 1"}));
  EXPECT_TRUE(U.is_unit());
  EXPECT_TRUE(buchberger(R, P(R, {"0", "0"})).elements().empty());
  EXPECT_TRUE(buchberger(R, P(R, {"3x"})).elements()[0] == parse_polynomial("x", R));
}

TEST(NormalForm, Examples) {
  auto R = make_ring({"x", "y"}, 32003, MonomialOrder::lex());
  GroebnerBasis G = buchberger(R, P(R, {"x^2 - y", "x*y - 1"}));
  EXPECT_EQ(normal_form(parse_polynomial("y^3", R), G), parse_polynomial("1", R));
  for (const auto& g : G.elements()) EXPECT_TRUE(normal_form(g, G).is_zero());
  auto S = make_ring({"x", "y"}, 32003);
  GroebnerBasis X = buchberger(S, P(S, {"x"}));
  EXPECT_EQ(normal_form(parse_polynomial("1", S), X), parse_polynomial("1", S));
  auto T = make_ring({"x", "y", "z"}, 32003);
  EXPECT_THROW(normal_form(parse_polynomial("x", T), X), RingMismatch);
}

TEST(IdealEqual, Examples) {
  auto R = make_ring({"x", "y", "z"}, 32003);
  auto g = MonomialOrder::grevlex();
  Ideal a = Ideal::parse(R, {"x^2", "x*y"});
  Ideal b(R, {parse_polynomial("x", R) * parse_polynomial("x", R), parse_polynomial("x", R) * parse_polynomial("y", R)});
  EXPECT_TRUE(ideal_equal(a, b, g));
  EXPECT_FALSE(ideal_equal(Ideal::parse(R, {"x"}), Ideal::parse(R, {"x^2"}), g));
  EXPECT_TRUE(ideal_equal(Ideal::parse(R, {"x - y", "y - z"}), Ideal::parse(R, {"x - z", "y - z"}), g));
  EXPECT_TRUE(ideal_equal(Ideal::parse(R, {"x - y", "y - z"}), Ideal::parse(R, {"x - z", "y - z"}), MonomialOrder::lex()));
}

TEST(Buchberger, ResourceLimit) {
  auto R = make_ring({"x", "y", "z", "w"}, 32003);
  GbOptions o;
  o.pair_budget = 1;
  EXPECT_THROW(buchberger(R, P(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), o), ResourceLimit);
  o.strategy = GbOptions::Strategy::f4;
  try {
    buchberger(R, P(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}), o);
    FAIL();
  } catch (const ResourceLimit& e) {
    EXPECT_EQ(e.budget(), 1u);
    EXPECT_GT(e.pairs_processed(), 1u);
  }
}

TEST(Buchberger, BuchbergerCriterionHolds) {
  // every S-polynomial of the output reduces to zero
  std::mt19937_64 rng(1);
  for (auto order : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block_elim(2)}) {
    auto R = make_ring({"a", "b", "c", "d"}, 32003, order);
    for (int it = 0; it < 10; ++it) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_homogeneous(R, rng, 2, 3));
      GroebnerBasis G = buchberger(R, gens);
      const auto& E = G.elements();
      for (std::size_t i = 0; i < E.size(); ++i) {
        for (std::size_t j = i + 1; j < E.size(); ++j) {
          Monomial l = lcm(E[i].leading_monomial(), E[j].leading_monomial());
          Polynomial s = E[i].times_monomial(E[i].leading_monomial().quotient_of(l)) -
                         E[j].times_monomial(E[j].leading_monomial().quotient_of(l));
          EXPECT_TRUE(normal_form(s, G).is_zero());
        }
        EXPECT_EQ(E[i].leading_coeff(), 1u);
        for (std::size_t j = 0; j < E.size(); ++j)
          if (i != j)
            for (const auto& t : E[j].terms()) EXPECT_FALSE(E[i].leading_monomial().divides(t.mono));
      }
      for (const auto& g : gens) EXPECT_TRUE(normal_form(g, G).is_zero());
    }
  }
}

TEST(Buchberger, CanonicalUnderShufflesAndStrategies) {
  std::mt19937_64 rng(2);
  auto R = make_ring({"a", "b", "c", "d", "e"}, 32003);
  for (int it = 0; it < 20; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 4; ++k) gens.push_back(random_homogeneous(R, rng, 2, 3));
    GroebnerBasis ref = buchberger(R, gens);
    for (const auto& g : ref.elements()) EXPECT_TRUE(g.is_homogeneous());
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    shuffled.push_back(gens[0] * gens[1] + gens[2]);
    shuffled.push_back(gens[3].scaled(5));
    EXPECT_EQ(buchberger(R, shuffled), ref);
    EXPECT_EQ(buchberger(R, shuffled, f4()), ref);
  }
}

TEST(Buchberger, NonHomogeneousStrategiesAgree) {
  std::mt19937_64 rng(9);
  auto R = make_ring({"x", "y", "z"}, 32003, MonomialOrder::lex());
  for (int it = 0; it < 20; ++it) {
    std::vector<Polynomial> gens;
    for (int k = 0; k < 3; ++k)
      gens.push_back(random_homogeneous(R, rng, 2, 2) + random_homogeneous(R, rng, 1, 1) + Polynomial::constant(R, it));
    EXPECT_EQ(buchberger(R, gens), buchberger(R, gens, f4()));
  }
}

TEST(NormalForm, Linearity) {
  std::mt19937_64 rng(4);
  auto R = make_ring({"x", "y", "z", "w"}, 32003);
  GroebnerBasis G = buchberger(R, P(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"}));
  for (int it = 0; it < 100; ++it) {
    Polynomial f = random_homogeneous(R, rng, 3, 4), g = random_homogeneous(R, rng, 2, 4);
    EXPECT_EQ(normal_form(f + g, G), normal_form(normal_form(f, G) + normal_form(g, G), G));
  }
}

TEST(Buchberger, DegreeTruncationAndHilbertHint) {
  auto R = make_ring({"x", "y", "z", "w"}, 32003, MonomialOrder::lex());
  auto gens = P(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
  GroebnerBasis full = buchberger(R, gens, f4());
  GbOptions o = f4();
  o.degree_bound = 2;
  GroebnerBasis part = buchberger(R, gens, o);
  EXPECT_TRUE(part.truncated());
  for (const auto& g : part.elements()) EXPECT_LE(g.total_degree(), 2u);
  // twisted cubic: Hilbert numerator 1 - 3t^2 + 2t^3
  GbOptions h = f4();
  h.hilbert_numerator = std::vector<std::int64_t>{1, 0, -3, 2};
  GbStats st;
  EXPECT_EQ(buchberger(R, gens, h, &st), full);
  EXPECT_GT(st.pairs_skipped_by_hilbert, 0u);
}
