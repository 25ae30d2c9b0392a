#include <gtest/gtest.h>

#include "secantlab/curves.hpp"
#include "secantlab/homalg.hpp"

using namespace secantlab;

namespace {

std::vector<unsigned> poles(const std::vector<BasisMonomial>& b) {
  std::vector<unsigned> v;
  for (const auto& m : b) v.push_back(m.pole);
  return v;
}

CurveModel genus_two() { return CurveModel::from_equation(2, 32003, "y^2 = x^5 + x + 1"); }

}  // namespace

TEST(CurveModel, Validation) {
  EXPECT_THROW(CurveModel::elliptic(32003, 0, 0, 0, 0, 0), InvalidCurve);  // cusp y^2 = x^3
  EXPECT_NO_THROW(CurveModel::elliptic(101, 0, 0, 0, 0, 1));
  EXPECT_THROW(CurveModel::hyperelliptic(32003, {1, 2, 1, 0, 0, 1, 1}), InvalidCurve);  // even degree
  EXPECT_THROW(CurveModel::hyperelliptic(32003, {0, 0, 1, 0, 0, 1}), InvalidCurve);     // x^2 | f
  EXPECT_THROW(CurveModel::from_equation(1, 32003, "y^2 - x^4 - 1"), InvalidCurve);
  EXPECT_THROW(CurveModel::from_equation(2, 32003, "y^2 - x^3 - 1"), InvalidCurve);
  EXPECT_THROW(CurveModel::from_equation(1, 32003, "x*y^2 - x^3 - 1"), InvalidCurve);
  CurveModel e = CurveModel::from_equation(1, 32003, "y^2 + x*y = x^3 - x + 3");
  EXPECT_EQ(e.equation(), parse_polynomial("y^2 + x*y - x^3 + x - 3", e.equation().ring()));
  EXPECT_NO_THROW(genus_two());
}

TEST(RiemannRoch, BasisExamples) {
  CurveModel e = CurveModel::elliptic(101, 0, 0, 0, 0, 1);
  auto b5 = rr_basis(e, 5);
  EXPECT_EQ(poles(b5), (std::vector<unsigned>{0, 2, 3, 4, 5}));
  EXPECT_EQ(b5[2].y_exp, 1u);
  EXPECT_EQ(rr_basis(e, 3).size(), 3u);
  auto b12 = rr_basis(genus_two(), 12);
  EXPECT_EQ(b12.size(), 11u);
  EXPECT_EQ(poles(b12), (std::vector<unsigned>{0, 2, 4, 5, 6, 7, 8, 9, 10, 11, 12}));
  EXPECT_THROW(rr_basis(genus_two(), 4), DegreeTooSmall);
  EXPECT_THROW(rr_basis(e, 2), DegreeTooSmall);
}

TEST(RiemannRoch, PoleOrdersAreTheNonGaps) {
  CurveModel e = CurveModel::elliptic(32003, 0, 0, 0, 1, 1);
  for (int d = 3; d <= 15; ++d) {
    auto b = rr_basis(e, d);
    EXPECT_EQ(static_cast<int>(b.size()), d);
    for (const auto& m : b) EXPECT_NE(m.pole, 1u);
  }
  for (int d = 5; d <= 15; ++d) {
    auto b = rr_basis(genus_two(), d);
    EXPECT_EQ(static_cast<int>(b.size()), d - 1);
    for (const auto& m : b) EXPECT_TRUE(m.pole != 1 && m.pole != 3);
  }
}

TEST(RationalNormalCurve, Examples) {
  CurveEmbedding c3 = rational_normal_curve(3);
  auto R = c3.ideal.ring();
  EXPECT_TRUE(ideal_equal(c3.ideal, Ideal::parse(R, {"z0*z2 - z1^2", "z0*z3 - z1*z2", "z1*z3 - z2^2"}), R->order()));
  EXPECT_TRUE(rational_normal_curve(1).ideal.is_zero());
  CurveEmbedding c4 = rational_normal_curve(4);
  EXPECT_EQ(c4.ideal.generators().size(), 6u);
  HilbertData hd = hilbert_data(c4.ideal);
  EXPECT_EQ(hd.degree, 4);
  EXPECT_EQ(hd.projective_dimension(), 1);
  EXPECT_EQ(embed(CurveModel::rational(), 4).ideal.generators(), c4.ideal.generators());
}

TEST(Embed, EllipticQuinticHasFiveQuadrics) {
  CurveEmbedding e = embed(CurveModel::from_equation(1, 101, "y^2 - x^3 - 1"), 5);
  EXPECT_EQ(e.r(), 4);
  EXPECT_EQ(e.ideal.generators().size(), 5u);
  BettiTable B = minimal_free_resolution(e.ideal);
  EXPECT_EQ(min_generator_degree(B), 2);
  EXPECT_EQ(B.at(1, 2), 5);
  EXPECT_EQ(regularity(B), 2);
  HilbertData hd = hilbert_data(e.ideal);
  EXPECT_EQ(hd.degree, 5);
  EXPECT_EQ(hd.projective_dimension(), 1);
}

TEST(Embed, GenusTwoSeptic) {
  CurveEmbedding e = embed(genus_two(), 7);
  EXPECT_EQ(e.r(), 5);
  HilbertData hd = hilbert_data(e.ideal);
  EXPECT_EQ(hd.degree, 7);
  EXPECT_EQ(hd.projective_dimension(), 1);
  EXPECT_EQ(regularity(minimal_free_resolution(e.ideal)), 2);
}

TEST(Embed, SampledPointsLieOnTheImage) {
  for (const CurveModel& C : {CurveModel::elliptic(32003, 1, 0, 2, 3, 5), genus_two(), CurveModel::rational()}) {
    int d = 2 * C.genus() + 3;
    CurveEmbedding e = embed(C, d);
    auto pts = C.sample_points(200, 7);
    ASSERT_EQ(pts.size(), 200u);
    for (const auto& P : pts) {
      ASSERT_TRUE(C.on_curve(P));
      auto z = e.point(P);
      for (const auto& g : e.ideal.generators()) ASSERT_EQ(g.evaluate(z), 0u);
    }
    CurvePoint inf{0, 0, true};
    for (const auto& g : e.ideal.generators()) EXPECT_EQ(g.evaluate(e.point(inf)), 0u);
  }
}

TEST(Sampling, DeterministicGivenSeed) {
  CurveModel e = CurveModel::elliptic(31013, 0, 0, 0, 1, 1);
  EXPECT_EQ(e.sample_points(20, 3), e.sample_points(20, 3));
  EXPECT_NE(e.sample_points(20, 3), e.sample_points(20, 4));
}

TEST(PointOnSecant, Examples) {
  CurveEmbedding q = rational_normal_curve(4);
  Ideal S = secant_join({1, q.ideal});
  PointedIdeal P = point_on_secant(q, 1, {{0, 0, false}, {1, 0, false}}, {1, 1}, S);
  EXPECT_EQ(P.point(), (std::vector<Coeff>{2, 1, 1, 1, 1}));
  EXPECT_EQ(S.generators()[0].evaluate(P.point()), 0u);
  PointedIdeal Q = point_on_secant(q, 0, {{5, 0, false}}, {3}, q.ideal);
  EXPECT_EQ(Q.chart(), 4u);
  CurveEmbedding e = embed(CurveModel::from_equation(1, 101, "y^2 - x^3 - 1"), 5);
  auto pts = e.model.sample_points(1, 1);
  EXPECT_THROW(point_on_secant(e, 1, {pts[0], pts[0]}, {1, 1}, e.ideal), DuplicatePoints);
  // a genuine secant point does not lie on the curve itself
  auto two = e.model.sample_points(2, 2);
  EXPECT_THROW(point_on_secant(e, 1, two, {1, 1}, e.ideal), PointNotOnVariety);
}

TEST(CurveFile, Parsing) {
  CurveSpec s = parse_curve_file("# elliptic quintic\ngenus: 1\nfield: 101\nequation: y^2 - x^3 - 1\ndegree: 5\n");
  EXPECT_EQ(s.model.genus(), 1);
  EXPECT_EQ(s.model.field().characteristic(), 101u);
  EXPECT_EQ(s.degree, 5);
  CurveSpec r = parse_curve_file("genus: 0\ndegree: 6\n");
  EXPECT_EQ(r.model.genus(), 0);
  EXPECT_EQ(r.model.field().characteristic(), 32003u);
  EXPECT_THROW(parse_curve_file("genus: 1\ndegree: 5\n"), InvalidCurve);
  EXPECT_THROW(parse_curve_file("genus: 1\nequation: y^2 - x^3 - 1\n"), InvalidCurve);
  EXPECT_THROW(parse_curve_file("genus: x\n"), ParseError);
  EXPECT_THROW(parse_curve_file("colour: blue\n"), ParseError);
  EXPECT_THROW(parse_curve_file("genus: 1\nfield: 100\nequation: y^2-x^3-1\ndegree: 5"), NotPrime);
  EXPECT_THROW(parse_curve_file("genus: 1\nequation: y^2 - x^3 - q\ndegree: 5"), UnknownVariable);
}
