#include <gtest/gtest.h>

#include <random>

#include "jumploci/errors.hpp"
#include "jumploci/jacobian.hpp"
#include "jumploci/syzygy.hpp"
#include "oracles.hpp"

using namespace jumploci;
using oracle::P;

namespace {

const char* kQuinticS1 = "x^5+y^5+(x^4+y^4)*z";
const char* kQuintic1 = "2*x^5+2*y^5+5*x^2*y^2*z";
const char* kZariski = "(x^2+y^2)^3+(y^3+z^3)^2";
const char* kSextic2 = "x^6+y^6+3*x^2*y^2*z^2";

std::vector<std::string> polys_of(const std::vector<Poly>& v) {
  std::vector<std::string> out;
  for (auto& p : v) out.push_back(p.to_string());
  return out;
}

bool in_span(const std::vector<Syzygy>& basis, const Syzygy& s) {
  if (basis.empty()) return false;
  EchelonSpace sp(static_cast<int>(basis[0].to_vector().size()));
  for (auto& b : basis) sp.insert(b.to_vector());
  return sp.contains(s.to_vector());
}

}  // namespace

TEST(Jacobian, TjurinaMatchesWorkedExamples) {
  EXPECT_EQ(tjurina(P(kQuinticS1)), 9);
  EXPECT_EQ(tjurina(P(kQuintic1)), 10);
  EXPECT_EQ(tjurina(P(kSextic2)), 12);
  EXPECT_EQ(tjurina(P(kZariski)), 12);
  EXPECT_EQ(tjurina(P("x^3+y^3+z^3")), 0);
}

TEST(Jacobian, RejectsBadInput) {
  try {
    JacobianData jd(P("x^2*y+z^2"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonHomogeneous);
  }
  try {
    JacobianData jd(P("x^2*y"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonReducedSuspected);
  }
  try {
    JacobianData jd(P("(x^2+y*z)^2*x"));
    FAIL();
  } catch (const MathError& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonReducedSuspected);
  }
}

TEST(Jacobian, PiecesMatchBruteForce) {
  Poly f = P(kQuinticS1);
  JacobianData jd(f);
  EXPECT_EQ(jacobian_piece(jd, 3).dim(), 0);
  EXPECT_EQ(jacobian_piece(jd, 4).dim(), 3);
  EXPECT_EQ(jd.m(4), 12);
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(jacobian_piece(jd, k).dim(), oracle::jacobian_dim(f, k)) << k;
  JacobianData fermat(P("x^4+y^4+z^4"));
  EXPECT_EQ(jacobian_piece(fermat, 3).dim(), 3);
}

TEST(Jacobian, SaturationExampleS1) {
  JacobianData jd(P(kQuinticS1));
  GradedSubspace s3 = saturate(jd, 3);
  EXPECT_EQ(s3.dim(), 2);
  EXPECT_TRUE(s3.contains(P("x^3")));
  EXPECT_TRUE(s3.contains(P("y^3")));
  EXPECT_EQ(polys_of(jd.n_basis(3)), (std::vector<std::string>{"x^3", "y^3"}));
  EXPECT_EQ(polys_of(jd.n_basis(4)), (std::vector<std::string>{"x^4", "x^3*y", "x*y^3"}));
  std::map<int, int> expect{{3, 2}, {4, 3}, {5, 3}, {6, 2}};
  for (int k = 0; k <= 12; ++k) EXPECT_EQ(jd.n(k), expect.count(k) ? expect[k] : 0) << k;
  EXPECT_EQ(jd.nu(), 3);
  for (int k = 10; k <= 12; ++k) EXPECT_EQ(saturate(jd, k).dim(), jacobian_piece(jd, k).dim());
}

TEST(Jacobian, NTablesOfWorkedExamples) {
  {
    JacobianData jd(P(kQuintic1));
    std::map<int, int> expect{{4, 2}, {5, 2}};
    for (int k = 0; k <= 10; ++k) EXPECT_EQ(jd.n(k), expect.count(k) ? expect[k] : 0) << k;
    EXPECT_EQ(jd.nu(), 2);
  }
  {
    JacobianData jd(P(kZariski));
    std::vector<int> expect{1, 4, 6, 7, 6, 4, 1};
    for (int k = 0; k <= 14; ++k) EXPECT_EQ(jd.n(k), k >= 3 && k <= 9 ? expect[static_cast<std::size_t>(k - 3)] : 0) << k;
    EXPECT_EQ(jd.nu(), 7);
  }
  {
    JacobianData jd(P(kSextic2));
    std::vector<int> expect{3, 6, 7, 6, 3};
    for (int k = 0; k <= 14; ++k) EXPECT_EQ(jd.n(k), k >= 4 && k <= 8 ? expect[static_cast<std::size_t>(k - 4)] : 0) << k;
    EXPECT_EQ(polys_of(jd.n_basis(4)), (std::vector<std::string>{"x^3*y", "x^2*y^2", "x*y^3"}));
  }
}

TEST(Jacobian, FreeArrangementHasNoN) {
  JacobianData jd(P("x*y*z"));
  for (int k = 0; k <= jd.top_degree() + 2; ++k) EXPECT_EQ(jd.n(k), 0) << k;
  EXPECT_EQ(jd.tjurina(), 3);
}

// J_f is m-primary for a smooth curve, so its saturation is all of S and
// N(f) is the whole Milnor algebra.
TEST(Jacobian, SmoothCurveNIsMilnorAlgebra) {
  JacobianData cubic(P("x^3+y^3+z^3"));
  std::vector<int> milnor{1, 3, 3, 1};
  for (int k = 0; k <= 5; ++k) EXPECT_EQ(cubic.n(k), k <= 3 ? milnor[static_cast<std::size_t>(k)] : 0) << k;
  EXPECT_EQ(saturate(cubic, 1).dim(), 3);
  JacobianData quartic(P("x^4+y^4+z^4"));
  EXPECT_EQ(quartic.nu(), 7);
  EXPECT_EQ(quartic.n(2), 6);
  EXPECT_EQ(quartic.n(4), 6);
}

TEST(Jacobian, NCoordinatesReproducePrintedMultiplication) {
  // (ax+by+cz)*x^3 = (a - 5c/4) x^4 + b x^3 y in the basis x^4, x^3y, xy^3
  JacobianData jd(P(kQuinticS1));
  Vec cz = jd.n_coordinates(4, P("z*x^3"));
  Vec cx = jd.n_coordinates(4, P("x*x^3"));
  Vec cy = jd.n_coordinates(4, P("y*x^3"));
  EXPECT_EQ(cx, (Vec{Scalar(1), Scalar(0), Scalar(0)}));
  EXPECT_EQ(cy, (Vec{Scalar(0), Scalar(1), Scalar(0)}));
  EXPECT_EQ(cz, (Vec{Scalar(mpq_class(-5, 4)), Scalar(0), Scalar(0)}));
  Vec wz = jd.n_coordinates(4, P("z*y^3"));
  EXPECT_EQ(wz, (Vec{Scalar(mpq_class(5, 4)), Scalar(0), Scalar(0)}));
}

TEST(Jacobian, HilbertShapeReports) {
  JacobianData a(P(kQuintic1));
  auto ra = verify_hilbert_shape(a, 3);
  EXPECT_EQ(ra.regime, "stable");
  EXPECT_TRUE(ra.pass);
  JacobianData b(P(kQuinticS1));
  auto rb = verify_hilbert_shape(b, 2);
  EXPECT_EQ(rb.regime, "unstable");
  EXPECT_TRUE(rb.pass);
  JacobianData c(P("x*y*z"));
  EXPECT_TRUE(verify_hilbert_shape(c, 1).pass);
}

TEST(Jacobian, RandomCurvesAgreeWithBruteForce) {
  std::mt19937_64 rng(7);
  int checked = 0;
  for (int trial = 0; trial < 12 && checked < 6; ++trial) {
    int d = 4 + trial % 2;
    Poly f = oracle::random_form(rng, d, 2, 5 + trial % 3);
    if (f.is_zero() || f.degree() != d || !is_reduced(f)) continue;
    JacobianData jd(f);
    ++checked;
    EXPECT_EQ(jd.tjurina(), oracle::tau(f)) << f.to_string();
    for (int k = 0; k <= jd.top_degree() + 1; ++k) {
      EXPECT_EQ(jd.n(k), oracle::n_dim(f, k)) << f.to_string() << " k=" << k;
      EXPECT_EQ(jd.n(k), jd.n(jd.top_degree() - k));
    }
  }
  EXPECT_GE(checked, 4);
}

TEST(Syzygy, ArDimsAndMdr) {
  Poly xyz = P("x*y*z");
  JacobianData jd(xyz);
  auto a1 = ar_piece(jd, 1);
  EXPECT_EQ(a1.size(), 2u);
  EXPECT_TRUE(in_span(a1, make_syzygy(jd, P("x"), P("-y"), Poly())));
  EXPECT_EQ(mdr(jd), 1);
  EXPECT_EQ(mdr_prime_and_ct(jd)->first, 1);
  auto cl = classify(jd, minimal_generators(jd));
  EXPECT_EQ(cl.kind, ClassKind::Free);
  EXPECT_EQ(cl.d1, 1);
  EXPECT_EQ(cl.d2, 1);

  JacobianData s1(P(kQuinticS1));
  EXPECT_EQ(ar_piece(s1, 1).size(), 0u);
  EXPECT_EQ(mdr(s1), 2);
  JacobianData q1(P(kQuintic1));
  EXPECT_EQ(mdr(q1), 3);
  JacobianData e5(P(kSextic2));
  EXPECT_EQ(mdr(e5), 4);
  EXPECT_EQ(ar_piece(e5, 4).size(), 2u);
}

TEST(Syzygy, ArDimFormulaMatchesKernel) {
  for (const char* s : {kQuinticS1, kQuintic1, "x*y*z", "x^4+y^4+z^4"}) {
    Poly f = P(s);
    JacobianData jd(f);
    for (int k = 0; k <= 2 * f.degree(); ++k) {
      EXPECT_EQ(ar_dim(jd, k), oracle::ar_dim(f, k)) << s << " " << k;
      EXPECT_EQ(koszul_dim(f.degree(), k), oracle::koszul_span_dim(f, k)) << s << " " << k;
    }
    if (f.degree() <= 5)
      for (int k = 0; k <= 5; ++k) EXPECT_EQ(static_cast<int>(ar_piece(jd, k).size()), ar_dim(jd, k));
  }
}

TEST(Syzygy, FermatQuarticKoszulExcess) {
  Poly f = P("x^4+y^4+z^4");
  JacobianData jd(f);
  // smooth: the partials form a regular sequence, so AR = KR throughout
  for (int k = 0; k <= 7; ++k) EXPECT_EQ(oracle::ar_dim(f, k), oracle::koszul_span_dim(f, k)) << k;
  EXPECT_FALSE(mdr_prime_and_ct(jd).has_value());
  EXPECT_EQ(ar_dim(jd, 3), 3);
  JacobianData s1(P(kQuinticS1));
  auto mc = mdr_prime_and_ct(s1);
  ASSERT_TRUE(mc.has_value());
  EXPECT_EQ(mc->first, 2);
  EXPECT_EQ(mc->second, 5);
}

TEST(Syzygy, GeneratorDegreesOfWorkedExamples) {
  auto degs = [](const char* s) {
    JacobianData jd(P(s));
    return analyze_syzygies(jd).generator_degrees();
  };
  EXPECT_EQ(degs(kQuinticS1), (std::vector<int>{2, 4, 4, 4}));
  EXPECT_EQ(degs(kQuintic1), (std::vector<int>{3, 3, 3, 3}));
  EXPECT_EQ(degs(kZariski), (std::vector<int>{3, 5, 5, 5}));
  EXPECT_EQ(degs(kSextic2), (std::vector<int>{4, 4, 5, 5, 5}));
}

TEST(Syzygy, PrintedGeneratorsLieInComputedModule) {
  JacobianData jd(P(kSextic2));
  Syzygy r1 = make_syzygy(jd, Poly(), P("-x^2*y*z"), P("y^4+x^2*z^2"));
  EXPECT_TRUE(in_span(ar_piece(jd, 4), r1));
  Syzygy r5 = make_syzygy(jd, P("-y^5-x^2*y*z^2"), P("x^5+x*y^2*z^2"), Poly());
  EXPECT_TRUE(in_span(ar_piece(jd, 5), r5));
  EXPECT_THROW(make_syzygy(jd, P("x"), P("y"), P("z")), MathError);
  auto gens = minimal_generators(jd);
  for (auto& g : gens) EXPECT_TRUE(is_syzygy(jd, g));
}

TEST(Syzygy, ClassificationAndNuCrossCheck) {
  struct Case {
    const char* f;
    ClassKind kind;
    int nu;
  };
  for (auto c : {Case{kQuinticS1, ClassKind::Neither, 3}, Case{kZariski, ClassKind::Neither, 7}, Case{"x*y*z", ClassKind::Free, 0}}) {
    JacobianData jd(P(c.f));
    auto s = analyze_syzygies(jd);
    EXPECT_EQ(s.classification.kind, c.kind) << c.f;
    EXPECT_EQ(s.classification.nu, c.nu) << c.f;
    const int d = jd.degree(), r = s.r, tau = jd.tjurina();
    if (2 * r < d) EXPECT_EQ(jd.nu(), (d - 1) * (d - 1) - r * (d - 1 - r) - tau);
    if (2 * r >= d - 2) EXPECT_EQ(jd.nu(), (3 * (d - 1) * (d - 1) + 3) / 4 - tau);
  }
}

TEST(Syzygy, DeltaQuotientForSmoothFermat) {
  JacobianData jd(P("x^4+y^4+z^4"));
  auto g = jd.gradient();
  Syzygy r1 = make_syzygy(jd, g.fy, -g.fx, Poly());
  Syzygy r2 = make_syzygy(jd, g.fz, Poly(), -g.fx);
  Poly v = delta_quotient(jd, r1, r2);
  EXPECT_EQ(v.normalized().to_string(), g.fx.normalized().to_string());
}

TEST(Syzygy, ParseSyzygyText) {
  JacobianData jd(P(kQuintic1));
  Syzygy s = parse_syzygy(jd, "0; x^2*y; -2*(y^3+x^2*z)");
  EXPECT_EQ(s.degree, 3);
  EXPECT_THROW(parse_syzygy(jd, "0; x^2*y"), ParseError);
  EXPECT_THROW(parse_syzygy(jd, "x;y;z"), MathError);
}
