#include <gtest/gtest.h>

#include <random>

#include "jumploci/errors.hpp"
#include "jumploci/parse.hpp"
#include "jumploci/poly.hpp"
#include "jumploci/polyalg.hpp"
#include "jumploci/univariate.hpp"

using namespace jumploci;

namespace {

const NumberField* eisenstein() { return NumberField::intern(parse_min_poly("t^2+t+1")); }

Scalar random_scalar(std::mt19937_64& rng, const NumberField* K) {
  std::uniform_int_distribution<int> d(-9, 9), den(1, 5);
  if (!K) return Scalar(mpq_class(d(rng), den(rng)));
  return Scalar::from_residue(K, {mpq_class(d(rng), den(rng)), mpq_class(d(rng), den(rng))});
}

Poly random_form(std::mt19937_64& rng, int deg) {
  std::uniform_int_distribution<int> d(-4, 4);
  Poly p;
  for (auto& m : monomial_basis(deg)) p.add_term(m, Scalar(d(rng)));
  return p;
}

}  // namespace

TEST(Scalar, FieldAxiomsRandomized) {
  std::mt19937_64 rng(11);
  for (const NumberField* K : {static_cast<const NumberField*>(nullptr), eisenstein()}) {
    for (int it = 0; it < 200; ++it) {
      Scalar a = random_scalar(rng, K), b = random_scalar(rng, K), c = random_scalar(rng, K);
      EXPECT_EQ((a + b) + c, a + (b + c));
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a * b, b * a);
      if (!a.is_zero()) EXPECT_TRUE((a * a.inverse()).is_one());
    }
  }
}

TEST(Scalar, NumberFieldRelation) {
  const NumberField* K = eisenstein();
  Scalar t = Scalar::generator(K);
  EXPECT_TRUE((t * t + t + Scalar(1)).is_zero());
  EXPECT_TRUE((t * t * t).is_one());
  EXPECT_TRUE(K->irreducibility_verified());
  EXPECT_THROW(NumberField::intern(parse_min_poly("t^2-4")), MathError);
}

TEST(Scalar, CanonicalRational) {
  Scalar s(mpq_class(6, -4));
  EXPECT_EQ(s.to_string(), "-3/2");
}

TEST(Monomials, BasisOrderAndIndex) {
  EXPECT_EQ(monomial_basis(0).size(), 1u);
  auto b1 = monomial_basis(1);
  ASSERT_EQ(b1.size(), 3u);
  EXPECT_EQ(b1[0], Monomial(1, 0, 0));
  EXPECT_EQ(b1[1], Monomial(0, 1, 0));
  EXPECT_EQ(b1[2], Monomial(0, 0, 1));
  EXPECT_EQ(monomial_basis(2).size(), 6u);
  EXPECT_TRUE(monomial_basis(-1).empty());
  for (int k = 0; k < 8; ++k) {
    auto b = monomial_basis(k);
    for (std::size_t i = 0; i < b.size(); ++i) {
      EXPECT_EQ(monomial_index(b[i]), static_cast<int>(i));
      EXPECT_EQ(monomial_at(k, static_cast<int>(i)), b[i]);
      if (i > 0) EXPECT_TRUE(grlex_greater(b[i - 1], b[i]));
    }
  }
}

TEST(Parse, GrammarAndErrors) {
  Poly f = parse_poly("x^5+y^5+(x^4+y^4)*z");
  EXPECT_EQ(f.degree(), 5);
  EXPECT_EQ(f.size(), 4u);
  EXPECT_EQ(parse_poly("3/6*x - 2*x").to_string(), "-3/2*x");
  EXPECT_THROW(parse_poly("2x"), ParseError);
  EXPECT_THROW(parse_poly("x+"), ParseError);
  EXPECT_THROW(parse_poly("x*t"), ParseError);
  EXPECT_THROW(parse_poly("(x+y"), ParseError);
  const NumberField* K = eisenstein();
  Poly g = parse_poly("t*x+y", K);
  EXPECT_EQ(g.coeff(Monomial(1, 0, 0)), Scalar::generator(K));
  EXPECT_EQ(parse_poly(g.to_string(), K), g);
}

TEST(Poly, Partials) {
  Partials p = partials(parse_poly("x^3+y^3+z^3"));
  EXPECT_EQ(p.fx, parse_poly("3*x^2"));
  EXPECT_EQ(p.fy, parse_poly("3*y^2"));
  EXPECT_EQ(p.fz, parse_poly("3*z^2"));
  EXPECT_EQ(partials(parse_poly("x^5+y^5+(x^4+y^4)*z")).fz, parse_poly("x^4+y^4"));
  Partials q = partials(parse_poly("x*y*z"));
  EXPECT_EQ(q.fx, parse_poly("y*z"));
  EXPECT_EQ(q.fy, parse_poly("x*z"));
  EXPECT_EQ(q.fz, parse_poly("x*y"));
  EXPECT_THROW(partials(parse_poly("x^3+y")), MathError);
}

TEST(Poly, ExactDivide) {
  Poly f = parse_poly("x^3+y^3");
  EXPECT_EQ(exact_divide(f * parse_poly("x+y"), f), parse_poly("x+y"));
  Poly q = parse_poly("2*x^5+2*y^5+5*x^2*y^2*z");
  EXPECT_EQ(exact_divide(parse_poly("x") * q, q), parse_poly("x"));
  EXPECT_THROW(exact_divide(parse_poly("x^2+y^2"), parse_poly("x+y")), MathError);
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    Poly a = random_form(rng, 1 + it % 4), b = random_form(rng, 1 + it % 3);
    if (b.is_zero()) continue;
    EXPECT_EQ(exact_divide(a * b, b), a);
  }
}

TEST(Poly, Det3) {
  Poly x = Poly::var(0), y = Poly::var(1), z = Poly::var(2);
  EXPECT_EQ(det3({{{x, y, z}, {Poly(), Poly(1), Poly()}, {Poly(), Poly(), Poly(1)}}}), x);
  EXPECT_TRUE(det3({{{x, y, z}, {x, y, z}, {y, z, x}}}).is_zero());
  std::mt19937_64 rng(7);
  for (int it = 0; it < 10; ++it) {
    std::array<std::array<Poly, 3>, 3> m{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = random_form(rng, i + 1);
    auto sw = m;
    std::swap(sw[0], sw[2]);
    EXPECT_EQ(det3(sw), -det3(m));
  }
  // smooth f: rows (x,y,z), Koszul syzygies; divisible by f
  Poly f = parse_poly("x^4+y^4+z^4");
  Partials p = partials(f);
  Poly d = det3({{{x, y, z}, {p.fy, -p.fx, Poly()}, {p.fz, Poly(), -p.fx}}});
  Poly q;
  EXPECT_TRUE(try_exact_divide(d, f, q));
}

TEST(Poly, SubstituteLine) {
  Point P{Scalar(1), Scalar(0), Scalar(0)}, Q{Scalar(0), Scalar(1), Scalar(1)};
  BinaryForm b = substitute_line(parse_poly("x^2+y^2"), P, Q);
  EXPECT_EQ(b.degree, 2);
  EXPECT_EQ(b.coeffs, (std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)}));
  EXPECT_TRUE(substitute_line(parse_poly("x"), {Scalar(0), Scalar(1), Scalar(0)}, {Scalar(0), Scalar(0), Scalar(1)}).is_zero());
  EXPECT_TRUE(substitute_line(parse_poly("x*y*z"), {Scalar(1), Scalar(0), Scalar(0)}, {Scalar(0), Scalar(1), Scalar(0)}).is_zero());
  EXPECT_THROW(substitute_line(parse_poly("x"), P, {Scalar(2), Scalar(0), Scalar(0)}), MathError);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 10; ++it) {
    Poly a = random_form(rng, 2), c = random_form(rng, 3);
    Point R{Scalar(static_cast<long>(rng() % 5)), Scalar(1), Scalar(-2)}, S{Scalar(3), Scalar(static_cast<long>(rng() % 7)), Scalar(1)};
    EXPECT_EQ(substitute_line(a * c, R, S), substitute_line(a, R, S) * substitute_line(c, R, S));
  }
}

TEST(Poly, BinaryGcdDegree) {
  Point P{Scalar(1), Scalar(0), Scalar(0)}, Q{Scalar(0), Scalar(1), Scalar(0)};
  // (xz, y^2, xy) restricted to x=0 through (0:1:0),(0:0:1)
  Point A{Scalar(0), Scalar(1), Scalar(0)}, B{Scalar(0), Scalar(0), Scalar(1)};
  std::vector<BinaryForm> forms;
  for (auto s : {"x*z", "y^2", "x*y"}) forms.push_back(substitute_line(parse_poly(s), A, B));
  EXPECT_EQ(binary_gcd_degree(forms), 2);
  std::vector<BinaryForm> none{substitute_line(parse_poly("z"), P, Q)};
  EXPECT_THROW(binary_gcd_degree(none), MathError);
}

// Common factors planted by hand; the cofactors are random and hence
// coprime with overwhelming probability, which the degree check confirms.
TEST(PolyGcd, PlantedFactors) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 12; ++it) {
    Poly g = random_form(rng, 1 + it % 3), a = random_form(rng, 2 + it % 2), b = random_form(rng, 3);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    Poly h = gcd(g * a, g * b);
    EXPECT_EQ(h, g.normalized());
    EXPECT_EQ(gcd(a, b).degree(), 0);
  }
}

TEST(PolyGcd, ContentAndVanishingLeadingCoefficients) {
  // common factor free of x, and leading x-coefficients vanishing at y = 3z
  EXPECT_EQ(gcd(parse_poly("y*(x+z)"), parse_poly("y*(x-z)")), parse_poly("y"));
  EXPECT_EQ(gcd(parse_poly("(y-3*z)*x^2+z^3"), parse_poly("(y-3*z)*x*z+y^3")).degree(), 0);
  EXPECT_EQ(gcd(parse_poly("((y-3*z)*x+z^2)*(x+y)"), parse_poly("((y-3*z)*x+z^2)*(x-y)")), parse_poly("x*y-3*x*z+z^2"));
  EXPECT_EQ(gcd(parse_poly("z^2*(x+y)"), parse_poly("z*(x+y)^2")), parse_poly("x*z+y*z"));
}

TEST(PolyGcd, SquarefreePart) {
  EXPECT_EQ(squarefree_part(parse_poly("x^4*y^4*z^4")), parse_poly("x*y*z"));
  EXPECT_EQ(squarefree_part(parse_poly("(x+y)^3*(x-2*z)*(x-2*z)")), parse_poly("(x+y)*(x-2*z)"));
  EXPECT_EQ(squarefree_part(parse_poly("2*x^2-y*z")), parse_poly("2*x^2-y*z"));
  const NumberField* K = eisenstein();
  Poly l = parse_poly("x+t*y", K), q = parse_poly("x^2+y*z", K);
  EXPECT_EQ(squarefree_part(l * l * q), (l * q).normalized());
}

// Oracle: exact solve followed by the rational Hessenberg charpoly.
TEST(PencilCharpoly, MatchesExactRatioOperator) {
  std::mt19937_64 rng(17);
  for (int n : {1, 2, 5, 9}) {
    Matrix B(n, n), C(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        B.at(i, j) = random_scalar(rng, nullptr) * Scalar(mpq_class(1000003, 7));
        C.at(i, j) = random_scalar(rng, nullptr);
      }
    auto op = solve_square(B, C);
    ASSERT_TRUE(op);
    auto chi = pencil_charpoly(B, C);
    ASSERT_TRUE(chi);
    EXPECT_EQ(*chi, characteristic_polynomial(*op)) << n;
  }
  Matrix S(2, 2), C(2, 2);
  S.at(0, 0) = Scalar(1);
  S.at(0, 1) = Scalar(2);
  S.at(1, 0) = Scalar(2);
  S.at(1, 1) = Scalar(4);
  EXPECT_FALSE(pencil_charpoly(S, C));
  // number-field entries take the exact path
  const NumberField* K = eisenstein();
  Matrix BK(2, 2), CK(2, 2);
  BK.at(0, 0) = Scalar(1);
  BK.at(1, 1) = parse_scalar("t", K);
  CK.at(0, 1) = Scalar(1);
  CK.at(1, 0) = parse_scalar("t", K);
  auto chiK = pencil_charpoly(BK, CK);
  ASSERT_TRUE(chiK);
  EXPECT_EQ(*chiK, characteristic_polynomial(*solve_square(BK, CK)));
}

TEST(Univariate, RationalRoots) {
  // (2X-3)(X+5)(X^2+1) X
  UPoly p = UPoly({Scalar(-3), Scalar(2)}) * UPoly({Scalar(5), Scalar(1)}) * UPoly({Scalar(1), Scalar(0), Scalar(1)}) *
            UPoly({Scalar(0), Scalar(1)});
  auto r = rational_roots(p);
  std::sort(r.begin(), r.end());
  ASSERT_EQ(r.size(), 3u);
  EXPECT_EQ(r[0], -5);
  EXPECT_EQ(r[1], 0);
  EXPECT_EQ(r[2], mpq_class(3, 2));
  // repeated roots
  UPoly q = UPoly({Scalar(-7), Scalar(4)}) * UPoly({Scalar(-7), Scalar(4)}) * UPoly({Scalar(1), Scalar(1)});
  EXPECT_EQ(rational_roots(q).size(), 2u);
}

TEST(Univariate, QuadraticFieldRoots) {
  const NumberField* K = eisenstein();
  // X^2 + X + 1 has both roots t and -t-1 in K; X^2-2 has none
  UPoly p = UPoly({Scalar(1), Scalar(1), Scalar(1)}) * UPoly({Scalar(-2), Scalar(0), Scalar(1)}) * UPoly({Scalar(mpq_class(-1, 3)), Scalar(1)});
  auto r = roots_in_field(p, K);
  ASSERT_EQ(r.size(), 3u);
  for (auto& x : r) EXPECT_TRUE(p.evaluate(x).is_zero());
  // polynomial with coefficients in K: (X - (2t+1/2))(X - 3)
  Scalar th = Scalar::from_residue(K, {mpq_class(1, 2), mpq_class(2)});
  UPoly g = UPoly({-th, Scalar(1)}) * UPoly({Scalar(-3), Scalar(1)});
  auto rg = roots_in_field(g, K);
  ASSERT_EQ(rg.size(), 2u);
  EXPECT_TRUE(rg[0] == th || rg[1] == th);
  EXPECT_EQ(roots_in_field(g, nullptr).size(), 1u);
}

TEST(Univariate, GcdAndSquarefree) {
  UPoly a = UPoly({Scalar(1), Scalar(1)}) * UPoly({Scalar(2), Scalar(1)});
  UPoly b = UPoly({Scalar(1), Scalar(1)}) * UPoly({Scalar(3), Scalar(1)});
  EXPECT_EQ(gcd(a, b), UPoly({Scalar(1), Scalar(1)}));
  EXPECT_EQ(squarefree_part(a * a), a.monic());
  EXPECT_EQ(root_multiplicity(a * a * b, Scalar(-1)), 3);
}

TEST(Univariate, GcdOfLargeRandomPolynomials) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> big(-1000000000L, 1000000000L), den(1, 97);
  auto random_upoly = [&](int deg) {
    std::vector<Scalar> c;
    for (int i = 0; i <= deg; ++i) c.emplace_back(mpq_class(big(rng), den(rng)));
    if (c.back().is_zero()) c.back() = Scalar(1);
    return UPoly(c);
  };
  for (int trial = 0; trial < 4; ++trial) {
    UPoly a = random_upoly(25), b = random_upoly(18), h = random_upoly(3 + trial);
    EXPECT_EQ(gcd(a, b), UPoly({Scalar(1)}));
    EXPECT_EQ(gcd(a * h, b * h), h.monic());
    EXPECT_EQ(squarefree_part(a * h * h).degree(), a.degree() + h.degree());
  }
  // leading coefficient divisible by the first reduction prime
  UPoly lead({Scalar(1), Scalar(mpq_class(mpz_class("4611686018427387847")))});
  EXPECT_EQ(gcd(lead, UPoly({Scalar(2), Scalar(1)})), UPoly({Scalar(1)}));
}

TEST(Univariate, RationalReconstruction) {
  mpz_class m("1000000007");
  mpz_class inv3;
  mpz_class three = 3;
  mpz_invert(inv3.get_mpz_t(), three.get_mpz_t(), m.get_mpz_t());
  auto q = rational_reconstruct(mpz_class(-2 * inv3 + m), m);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, mpq_class(-2, 3));
}
