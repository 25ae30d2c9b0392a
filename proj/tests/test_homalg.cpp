#include <gtest/gtest.h>

#include <random>

#include "koszul_oracle.hpp"
#include "secantlab/homalg.hpp"

using namespace secantlab;

namespace {

Ideal twisted_cubic(MonomialOrder o = MonomialOrder::grevlex()) {
  auto R = make_ring({"x", "y", "z", "w"}, 32003, o);
  return Ideal::parse(R, {"x*z - y^2", "x*w - y*z", "y*w - z^2"});
}

BettiTable table(std::size_t n, std::initializer_list<std::tuple<int, int, std::int64_t>> e) {
  BettiTable B(n);
  for (auto [i, j, b] : e) B.set(i, j, b);
  return B;
}

Polynomial random_form(const RingPtr& R, std::mt19937_64& rng, unsigned deg, int nterms) {
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

void expect_betti_hilbert_identity(const Ideal& I) {
  BettiTable B = minimal_free_resolution(I);
  HilbertData hd = hilbert_data(I);
  EXPECT_EQ(betti_numerator(B), hd.numerator);
  EXPECT_EQ(hilbert_data_from_numerator(betti_numerator(B), I.ring()->nvars()).degree, hd.degree);
  EXPECT_LE(projective_dimension(B), static_cast<int>(I.ring()->nvars()));
  EXPECT_EQ(B.at(0, 0), 1);
}

}  // namespace

TEST(MinimalFreeResolution, TwistedCubic) {
  BettiTable B = minimal_free_resolution(twisted_cubic());
  EXPECT_EQ(B, table(4, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}}));
  EXPECT_EQ(regularity(B), 1);
  EXPECT_TRUE(check_ndp(B, 2, 1));
  EXPECT_EQ(min_generator_degree(B), 2);
  EXPECT_TRUE(is_acm(B, hilbert_data(twisted_cubic())));
}

TEST(MinimalFreeResolution, QuinticHypersurface) {
  auto R = make_ring(indexed_names("x", 5), 32003);
  Ideal I = Ideal::parse(R, {"x0^5 + x1^5 + x2^5 + x3^5 + x4^5 - 5x0*x1*x2*x3*x4"});
  BettiTable B = minimal_free_resolution(I);
  EXPECT_EQ(B, table(5, {{0, 0, 1}, {1, 5, 1}}));
  EXPECT_EQ(regularity(B), 4);
  EXPECT_TRUE(check_ndp(B, 5, 0));
  EXPECT_EQ(koszul_dim(B, 1, 4), 1);
  EXPECT_EQ(koszul_dim(B, 0, 0), 1);
  EXPECT_EQ(min_generator_degree(B), 5);
  EXPECT_TRUE(is_acm(B, hilbert_data(I)));
}

TEST(MinimalFreeResolution, CompleteIntersectionOfTwoCubics) {
  std::mt19937_64 rng(5);
  auto R = make_ring(indexed_names("x", 6), 32003);
  Ideal I(R, {random_form(R, rng, 3, 12), random_form(R, rng, 3, 12)});
  BettiTable B = minimal_free_resolution(I);
  EXPECT_EQ(B, table(6, {{0, 0, 1}, {1, 3, 2}, {2, 6, 1}}));
  EXPECT_TRUE(check_ndp(B, 3, 1));
  EXPECT_FALSE(check_ndp(B, 3, 2));
  EXPECT_EQ(koszul_dim(B, 2, 4), 1);
  EXPECT_EQ(max_ndp_p(B, 3).p, 1);
  EXPECT_FALSE(max_ndp_p(B, 3).all);
}

TEST(MinimalFreeResolution, NonAcmExample) {
  auto R = make_ring({"x", "y", "z"}, 32003);
  Ideal I = Ideal::parse(R, {"x^2", "x*y"});
  BettiTable B = minimal_free_resolution(I);
  EXPECT_EQ(B, table(3, {{0, 0, 1}, {1, 2, 2}, {2, 3, 1}}));
  HilbertData hd = hilbert_data(I);
  EXPECT_EQ(hd.projective_dimension(), 1);
  EXPECT_FALSE(is_acm(B, hd));
}

TEST(MinimalFreeResolution, ZeroAndUnitIdeals) {
  auto R = make_ring({"x", "y", "z"}, 32003);
  BettiTable B = minimal_free_resolution(Ideal(R, {}));
  EXPECT_EQ(B, table(3, {{0, 0, 1}}));
  EXPECT_EQ(regularity(B), 0);
  EXPECT_THROW(min_generator_degree(B), ZeroIdeal);
  EXPECT_TRUE(max_ndp_p(B, 2).all);
  EXPECT_THROW(minimal_free_resolution(Ideal::parse(R, {"x", "1"})), InvalidArgument);
  EXPECT_THROW(check_ndp(B, 1, 0), InvalidArgument);
}

TEST(HilbertData, Examples) {
  HilbertData hd = hilbert_data(twisted_cubic());
  EXPECT_EQ(hd.numerator, (IntPoly{1, 0, -3, 2}));
  EXPECT_EQ(hd.reduced, (IntPoly{1, 2}));
  EXPECT_EQ(hd.projective_dimension(), 1);
  EXPECT_EQ(hd.degree, 3);
  EXPECT_EQ(hd.hilbert_function(4), 13);
  auto R = make_ring(indexed_names("x", 5), 32003);
  HilbertData z = hilbert_data(Ideal(R, {}));
  EXPECT_EQ(z.degree, 1);
  EXPECT_EQ(z.projective_dimension(), 4);
  EXPECT_EQ(int_poly_to_string(hd.numerator), "1 - 3*t^2 + 2*t^3");
}

TEST(MinimalFreeResolution, BettiHilbertIdentityOnRandomIdeals) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 20; ++it) {
    auto R = make_ring(indexed_names("x", 4 + it % 2), 32003);
    std::vector<Polynomial> g;
    int ng = 2 + it % 4;
    for (int k = 0; k < ng; ++k) g.push_back(random_form(R, rng, 2 + (k + it) % 2, 1 + (it % 3) * 3));
    expect_betti_hilbert_identity(Ideal(R, g));
  }
}

TEST(MinimalFreeResolution, AgreesWithKoszulHomology) {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 12; ++it) {
    auto R = make_ring(indexed_names("x", 4), 32003);
    std::vector<Polynomial> g;
    int ng = 2 + it % 4;
    for (int k = 0; k < ng; ++k) g.push_back(random_form(R, rng, 2 + k % 2, 1 + it % 4));
    Ideal I(R, g);
    BettiTable B = minimal_free_resolution(I);
    int top = regularity(B) + projective_dimension(B);
    EXPECT_EQ(oracle_test::koszul_betti(I, top), B) << to_text(B);
  }
  EXPECT_EQ(oracle_test::koszul_betti(twisted_cubic(), 5), minimal_free_resolution(twisted_cubic()));
}

TEST(MinimalFreeResolution, IndependentOfMonomialOrder) {
  BettiTable g = minimal_free_resolution(twisted_cubic());
  BettiTable l = minimal_free_resolution(twisted_cubic(MonomialOrder::lex()));
  EXPECT_EQ(g, l);
  std::mt19937_64 rng(2);
  auto R = make_ring(indexed_names("x", 5), 32003);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 4; ++k) gens.push_back(random_form(R, rng, 2, 4));
  Ideal I(R, gens);
  EXPECT_EQ(minimal_free_resolution(I), minimal_free_resolution(I.in_ring(with_order(R, MonomialOrder::lex()))));
}

TEST(MinimalFreeResolution, DegreeTruncation) {
  std::mt19937_64 rng(4);
  auto R = make_ring(indexed_names("x", 5), 32003);
  std::vector<Polynomial> gens;
  for (int k = 0; k < 5; ++k) gens.push_back(random_form(R, rng, 2, 3));
  Ideal I(R, gens);
  BettiTable full = minimal_free_resolution(I);
  for (long bound : {2L, 3L, 4L, 5L}) {
    ResolutionOptions o;
    o.degree_bound = bound;
    BettiTable t = minimal_free_resolution(I, o);
    for (const auto& [k, v] : full.entries)
      if (k.second <= bound) EXPECT_EQ(t.at(k.first, k.second), v);
    for (const auto& [k, v] : t.entries) EXPECT_LE(k.second, bound);
  }
}

TEST(BettiTable, TextDisplay) {
  BettiTable B = table(4, {{0, 0, 1}, {1, 2, 3}, {2, 3, 2}});
  EXPECT_EQ(to_text(B), "       0 1 2\ntotal: 1 3 2\n    0: 1 . .\n    1: . 3 2\n");
}

TEST(BettiTable, GenericSectionAgreesWithDirectResolution) {
  EXPECT_EQ(betti_table(twisted_cubic()), minimal_free_resolution(twisted_cubic()));
  auto R3 = make_ring({"x", "y", "z"}, 32003);
  Ideal non_cm = Ideal::parse(R3, {"x^2", "x*y"});
  EXPECT_EQ(betti_table(non_cm), minimal_free_resolution(non_cm));
  EXPECT_FALSE(generic_linear_section(non_cm, 2, 1).has_value());
  std::mt19937_64 rng(8);
  for (int it = 0; it < 10; ++it) {
    auto R = make_ring(indexed_names("x", 5), 32003);
    std::vector<Polynomial> g;
    for (int k = 0; k < 1 + it % 3; ++k) g.push_back(random_form(R, rng, 2 + k % 2, 4));
    Ideal I(R, g);
    EXPECT_EQ(betti_table(I, {}, static_cast<std::uint64_t>(it)), minimal_free_resolution(I));
  }
}

TEST(BettiTable, GenericSectionKeepsTruncation) {
  ResolutionOptions o;
  o.degree_bound = 2;
  BettiTable B = betti_table(twisted_cubic(), o);
  EXPECT_EQ(B.at(1, 2), 3);
  EXPECT_EQ(B.at(2, 3), 0);
  EXPECT_EQ(B.degree_bound, 2L);
  EXPECT_EQ(B.nvars, 4u);
}
