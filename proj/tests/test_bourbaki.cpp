#include <gtest/gtest.h>


#include "jumploci/bourbaki.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/parse.hpp"
#include "oracles.hpp"

using namespace jumploci;
using oracle::P;

namespace {

const char* kQuinticS1 = "x^5+y^5+(x^4+y^4)*z";
const char* kQuintic1 = "2*x^5+2*y^5+5*x^2*y^2*z";
const char* kZariski = "(x^2+y^2)^3+(y^3+z^3)^2";
const char* kSextic2 = "x^6+y^6+3*x^2*y^2*z^2";
const char* kNonic = "x^5*y^2*z^2+x^9+y^9";

Point pt(const std::string& s, const NumberField* k = nullptr) { return parse_point(s, k); }

// Two homogeneous ideals agree when their spans agree in every degree up
// to the top generator degree.
bool same_ideal(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  int top = 0;
  for (auto& g : a) top = std::max(top, g.degree());
  for (auto& g : b) top = std::max(top, g.degree());
  for (int k = 0; k <= top; ++k) {
    EchelonSpace sa = oracle::ideal_span(a, k), sb = oracle::ideal_span(b, k);
    if (sa.dim() != sb.dim()) return false;
    for (auto& g : b)
      if (g.degree() == k && !sa.contains(g.coefficients(k))) return false;
  }
  return true;
}

int index_of(const std::vector<Point>& pts, const Point& p) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (projectively_equal(pts[i], p)) return static_cast<int>(i);
  return -1;
}


struct Curve {
  JacobianData jd;
  SyzygyModuleData sm;
  explicit Curve(const std::string& f, const NumberField* k = nullptr) : jd(P(f, k)), sm(analyze_syzygies(jd)) {}
};

}  // namespace

TEST(Bourbaki, Quintic1PrintedSyzygy) {
  Curve c(kQuintic1);
  ASSERT_EQ(c.sm.r, 3);
  Syzygy rho1 = parse_syzygy(c.jd, "0;x^2*y;-2*(y^3+x^2*z)");
  BourbakiData bd = bourbaki_ideal(c.jd, c.sm, rho1);
  EXPECT_TRUE(same_ideal(bd.generators, {P("x*z"), P("y^2"), P("x*y")}));
  EXPECT_EQ(bd.degree, 3);
  EXPECT_EQ(bd.formulaDegree, 3);
  ASSERT_EQ(bd.supportPoints.size(), 2U);
  int simple = index_of(bd.supportPoints, pt("1,0,0")), dbl = index_of(bd.supportPoints, pt("0,0,1"));
  ASSERT_GE(simple, 0);
  ASSERT_GE(dbl, 0);
  EXPECT_EQ(bd.supportMultiplicities[static_cast<std::size_t>(simple)], 1);
  EXPECT_EQ(bd.supportMultiplicities[static_cast<std::size_t>(dbl)], 2);
  EXPECT_EQ(bd.deficit, 0);

  // x = 0 through the double point: restrictions to x=0 leave (y^2)
  EXPECT_EQ(intersection_multiplicity(bd, pt("1,0,0")), 2);
  // y = 0 meets both points, but crosses the double point's local ideal
  // (x, y^2) transversally: the restriction is (xz)
  EXPECT_EQ(intersection_multiplicity(bd, pt("0,1,0")), 2);

  // a line on the jumping conic ab = c^2 avoiding the support
  Point L = pt("1,1,1");
  EXPECT_EQ(intersection_multiplicity(bd, L), 0);
  SplittingPrediction pred = predicted_splitting(5, 3, 0);
  EXPECT_EQ(pred.kind, SplittingPrediction::Kind::LowerBound);
  EXPECT_EQ(pred.lowerBound, 1);
  SplittingType direct = splitting_along_line(c.jd, 3, L);
  EXPECT_EQ(direct.d1, 1);
  EXPECT_TRUE(pred.agrees(direct));
}

TEST(Bourbaki, ZariskiUniqueSyzygy) {
  Curve c(kZariski);
  ASSERT_EQ(c.sm.r, 3);
  Syzygy printed = parse_syzygy(c.jd, "y*z^2;-x*z^2;x*y^2");
  BourbakiData bd = bourbaki_ideal(c.jd, c.sm, printed);
  EXPECT_TRUE(same_ideal(bd.generators, {P("x*y^2"), P("x*z^2"), P("y*z^2")}));
  EXPECT_EQ(bd.degree, 7);
  // local ideals (u^2,v^2), (u,v^2), (u,v)
  const std::vector<std::pair<const char*, int>> expected{{"1,0,0", 4}, {"0,1,0", 2}, {"0,0,1", 1}};
  ASSERT_EQ(bd.supportPoints.size(), 3U);
  for (auto& [s, m] : expected) {
    int i = index_of(bd.supportPoints, pt(s));
    ASSERT_GE(i, 0) << s;
    EXPECT_EQ(bd.supportMultiplicities[static_cast<std::size_t>(i)], m) << s;
  }
  for (auto& p : bd.supportPoints) EXPECT_FALSE(c.jd.f().evaluate(p).is_zero());

  // ar(f)_3 = 1: the default choice and a rescaling give the same ideal
  BourbakiData other = bourbaki_ideal(c.jd, c.sm, default_rho1(c.jd, 3) * P("-7/3"));
  EXPECT_TRUE(same_ideal(bd.generators, other.generators));
  EXPECT_THROW(combo_rho1(c.jd, 3, Scalar(1)), MathError);
}

TEST(Bourbaki, Sextic2Choices) {
  Curve c(kSextic2);
  ASSERT_EQ(c.sm.r, 4);
  Syzygy r1 = parse_syzygy(c.jd, "0;-x^2*y*z;y^4+x^2*z^2");
  Syzygy r2 = parse_syzygy(c.jd, "-x*y^2*z;0;x^4+y^2*z^2");

  BourbakiData one = bourbaki_ideal(c.jd, c.sm, r1);
  EXPECT_TRUE(same_ideal(one.generators, {P("x*y*z"), P("x*z^3"), P("y^3*z"), P("y^4+x^2*z^2")}));
  EXPECT_EQ(one.degree, 9);
  ASSERT_EQ(one.supportPoints.size(), 2U);
  // (uv, v^2+u^4) has length 6, (u, v^3) length 3
  EXPECT_EQ(one.supportMultiplicities[static_cast<std::size_t>(index_of(one.supportPoints, pt("1,0,0")))], 6);
  EXPECT_EQ(one.supportMultiplicities[static_cast<std::size_t>(index_of(one.supportPoints, pt("0,0,1")))], 3);

  BourbakiData two = bourbaki_ideal(c.jd, c.sm, r2);
  EXPECT_TRUE(same_ideal(two.generators, {P("x*y*z"), P("x^3*z"), P("y*z^3"), P("x^4+y^2*z^2")}));
  ASSERT_EQ(two.supportPoints.size(), 2U);
  EXPECT_GE(index_of(two.supportPoints, pt("0,1,0")), 0);
  EXPECT_GE(index_of(two.supportPoints, pt("0,0,1")), 0);

  // t = -1, i.e. s = 1: nine simple points, two of them over Q(i)
  Syzygy mix = r1;
  for (int i = 0; i < 3; ++i) mix.comp[static_cast<std::size_t>(i)] = r1.comp[static_cast<std::size_t>(i)] - r2.comp[static_cast<std::size_t>(i)];
  BourbakiData three = bourbaki_ideal(c.jd, c.sm, mix);
  EXPECT_EQ(three.degree, 9);
  EXPECT_EQ(three.distinctPoints, 9);
  EXPECT_EQ(three.supportPoints.size(), 7U);
  EXPECT_EQ(three.deficit, 2);
  for (const char* s : {"1,1,0", "-1,1,0", "0,1,1", "0,1,-1", "1,0,1", "-1,0,1", "0,0,1"}) EXPECT_GE(index_of(three.supportPoints, pt(s)), 0) << s;
  // the line z = 0 carries four of them
  EXPECT_EQ(intersection_multiplicity(three, pt("0,0,1")), 4);

  const NumberField* gi = NumberField::intern(parse_min_poly("t^2+1"));
  Curve ck(kSextic2, gi);
  Syzygy mixk = parse_syzygy(ck.jd, mix.to_string(), gi);
  BourbakiData threek = bourbaki_ideal(ck.jd, ck.sm, mixk, gi);
  EXPECT_EQ(threek.supportPoints.size(), 9U);
  EXPECT_EQ(threek.deficit, 0);
  EXPECT_GE(index_of(threek.supportPoints, pt("t,1,0", gi)), 0);
  EXPECT_GE(index_of(threek.supportPoints, pt("-t,1,0", gi)), 0);
  for (int m : threek.supportMultiplicities) EXPECT_EQ(m, 1);

  // x+y+z = 0 misses the Choice 1 support; r > d/2 gives d1 >= 1, attained
  Point L = pt("1,1,1");
  EXPECT_EQ(intersection_multiplicity(one, L), 0);
  SplittingPrediction pred = predicted_splitting(6, 4, 0);
  EXPECT_EQ(pred.kind, SplittingPrediction::Kind::LowerBound);
  EXPECT_EQ(pred.lowerBound, 1);
  EXPECT_EQ(splitting_along_line(c.jd, 4, L).d1, 1);
}

TEST(Bourbaki, QuinticS1SupportAndPredictions) {
  Curve c(kQuinticS1);
  ASSERT_EQ(c.sm.r, 2);
  BourbakiData bd = bourbaki_ideal(c.jd, c.sm, default_rho1(c.jd, 2));
  EXPECT_EQ(bd.degree, 3);
  EXPECT_EQ(bd.degree, c.jd.nu());  // 2r < d
  ASSERT_EQ(bd.supportPoints.size(), 3U);
  for (const char* s : {"1,0,0", "0,1,0", "4,4,-5"}) EXPECT_GE(index_of(bd.supportPoints, pt(s)), 0) << s;
  for (int m : bd.supportMultiplicities) EXPECT_EQ(m, 1);

  for (const char* s : {"0,0,1", "0,5,4", "5,0,4"}) {
    Point L = pt(s);
    int mL = intersection_multiplicity(bd, L);
    EXPECT_EQ(mL, 2) << s;
    SplittingPrediction pred = predicted_splitting(5, 2, mL);
    ASSERT_EQ(pred.kind, SplittingPrediction::Kind::Exact);
    EXPECT_EQ(pred.type, (SplittingType{0, 4}));
    EXPECT_EQ(splitting_along_line(c.jd, 2, L), pred.type) << s;
  }
  // one support point on the line: (1, 3); none: (2, 2)
  for (const char* s : {"0,1,3", "1,2,3", "3,-1,7"}) {
    Point L = pt(s);
    SplittingPrediction pred = predicted_splitting(5, 2, intersection_multiplicity(bd, L));
    ASSERT_EQ(pred.kind, SplittingPrediction::Kind::Exact);
    EXPECT_EQ(splitting_along_line(c.jd, 2, L), pred.type) << s;
  }
  EXPECT_EQ(predicted_splitting(5, 2, 0).type, (SplittingType{2, 2}));
  EXPECT_EQ(predicted_splitting(5, 2, 1).type, (SplittingType{1, 3}));

  // V_{r-1} is the union of the pencils through the support points
  LocusReport v1 = locus_report(c.jd, 2, 1);
  ASSERT_TRUE(v1.reducedCurve.has_value());
  EXPECT_EQ(v1.reducedCurve->normalized(), support_pencils(bd).normalized());
}

TEST(Bourbaki, NonicSinglePoint) {
  Curve c(kNonic);
  ASSERT_EQ(c.sm.r, 4);
  Syzygy rho1 = parse_syzygy(c.jd, "-2*x*y^2*z;0;9*x^4+5*y^2*z^2");
  BourbakiData bd = bourbaki_ideal(c.jd, c.sm, rho1);
  EXPECT_EQ(bd.degree, bd.formulaDegree);
  EXPECT_EQ(bd.distinctPoints, 1);
  ASSERT_EQ(bd.supportPoints.size(), 1U);
  EXPECT_TRUE(projectively_equal(bd.supportPoints[0], pt("0,1,0")));
  EXPECT_EQ(bd.supportMultiplicities[0], bd.degree);
  // the components of rho1 also vanish at (0:0:1), which lies on C
  EXPECT_TRUE(vanishes_at({rho1.comp[0], rho1.comp[1], rho1.comp[2]}, pt("0,0,1")));
  EXPECT_TRUE(c.jd.f().evaluate(pt("0,0,1")).is_zero());
}

TEST(Bourbaki, FreeCurveGivesUnitIdeal) {
  Curve c("x*y*z");
  BourbakiData bd = bourbaki_ideal(c.jd, c.sm, default_rho1(c.jd, c.sm.r));
  EXPECT_TRUE(bd.unitIdeal);
  EXPECT_EQ(bd.degree, 0);
  EXPECT_TRUE(bd.supportPoints.empty());
  EXPECT_EQ(intersection_multiplicity(bd, pt("1,2,3")), 0);
}

TEST(Bourbaki, RejectsBadInput) {
  Curve c(kQuinticS1);
  EXPECT_THROW(bourbaki_ideal(c.jd, c.sm, Syzygy{2, {Poly(), Poly(), Poly()}}), MathError);
  EXPECT_THROW(bourbaki_ideal(c.jd, c.sm, default_rho1(c.jd, 2) * P("x")), MathError);
  EXPECT_THROW(points_on_line(pt("0,0,0")), std::exception);
  BourbakiData fake;
  fake.generators = {P("x"), P("x^2")};
  EXPECT_THROW(intersection_multiplicity(fake, pt("1,0,0")), MathError);
}

TEST(Bourbaki, PredictionCases) {
  EXPECT_EQ(predicted_splitting(6, 3, 0).kind, SplittingPrediction::Kind::Exact);
  EXPECT_EQ(predicted_splitting(6, 3, 0).type, (SplittingType{2, 3}));
  EXPECT_EQ(predicted_splitting(6, 3, 1).kind, SplittingPrediction::Kind::None);
  EXPECT_EQ(predicted_splitting(7, 3, 2).type, (SplittingType{1, 5}));
  EXPECT_EQ(predicted_splitting(7, 5, 0).lowerBound, 1);
  EXPECT_EQ(predicted_splitting(7, 5, 1).kind, SplittingPrediction::Kind::None);
  EXPECT_TRUE(predicted_splitting(7, 5, 0).agrees({1, 5}));
  EXPECT_FALSE(predicted_splitting(7, 5, 0).agrees({0, 6}));
}
