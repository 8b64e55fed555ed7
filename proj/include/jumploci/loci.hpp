#ifndef JUMPLOCI_LOCI_HPP
#define JUMPLOCI_LOCI_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jumploci/jacobian.hpp"

namespace jumploci {

// Polynomials in the dual coordinates reuse Poly with variables named a,b,c.
inline const std::array<const char*, 3> kDualNames{"a", "b", "c"};

// a*m[0] + b*m[1] + c*m[2] with scalar matrices of equal shape.
struct LinearMatrix {
  std::array<Matrix, 3> m;
  int rows() const { return m[0].rows(); }
  int cols() const { return m[0].cols(); }
  Matrix at(const Point& p) const;
  std::vector<std::vector<Poly>> symbolic() const;
};

// Largest square size for which symbolic determinants are attempted.
constexpr int kSymbolicDeterminantCap = 16;
// Budget for expanding all maximal minors, in units of (minor count) * size^3.
constexpr double kMinorWorkCap = 65536;
double minor_work(int rows, int cols);

LinearMatrix multiplication_matrices(const JacobianData& jd, int k);
// Determinant over K[a,b,c], checked at five random integer points;
// throws VerificationMismatch.
Poly square_determinant(const std::vector<std::vector<Poly>>& symbolic, std::uint64_t seed = 0x5eed);
Poly square_determinant(const LinearMatrix& lm);
std::vector<Poly> minor_ideal(const LinearMatrix& lm);

// Degree always refers to the reduced support: the number of distinct
// points in dimension 0, the degree of the reduced curve in dimension 1.
struct DimDegree {
  int dimension = -1;  // -1 empty, 0 points, 1 curve, 2 plane
  int degree = 0;
  // 1-dimensional part: the gcd of the generators and its reduced form
  Poly curve;
  int reducedCurveDegree = 0;
  // ideal left after dividing out the curve: its length and its point count
  int residualLength = 0;
  int residualPoints = 0;
  std::vector<Poly> residualGenerators;
  int boundUsed = 0;
};

// Degree bound defaults to 4 * (max generator degree) + 8 and is doubled
// once before giving up with BoundTooSmall.
DimDegree ideal_dim_degree(const std::vector<Poly>& gens, int degreeBound = -1);
// Length of a zero-dimensional (or unit) ideal; the generators must not share a factor.
int zero_dim_degree(const std::vector<Poly>& gens, int degreeBound = -1, int* boundUsed = nullptr);

struct ZeroDimCount {
  int length = 0;
  int points = 0;  // distinct points over the algebraic closure
  int boundUsed = 0;
};
ZeroDimCount zero_dim_count(const std::vector<Poly>& gens, int degreeBound = -1);

struct PointSearch {
  std::vector<Point> points;
  std::vector<int> multiplicities;  // local length of the scheme at each point
  int length = 0;
  int degree = 0;   // distinct points over the algebraic closure
  int deficit = 0;  // degree minus number of K-points found
  bool heightSearchRun = false;
};

// K-rational common zeros of a zero-dimensional ideal.
PointSearch rational_points(const std::vector<Poly>& gens, const NumberField* field = nullptr, int heightBound = 40, std::uint64_t seed = 0x9017);
bool vanishes_at(const std::vector<Poly>& gens, const Point& p);

// Determinant of multiplication by alpha_L^2 on N(f)_{3d'-4} -> N(f)_{3d'-2}.
Poly hulek_second_kind(const JacobianData& jd);

struct LocusReport {
  int k = 0;
  int rows = 0, cols = 0;
  int delta = 0;
  // "full", "empty", "square", "minors", or "minors_unexpanded" when the
  // minor count is over kMinorWorkCap (dimension is then -2, unknown)
  std::string shape;
  int dimension = -1;
  int degree = 0;
  std::optional<Poly> definingPolynomial;
  std::vector<Poly> minorGenerators;
  std::optional<Poly> reducedCurve;
  int length = 0;  // scheme length of the isolated part (minors case)
  std::vector<Point> rationalPoints;  // isolated points, dual coordinates
  int pointDeficit = 0;
};

// Direct rank test: is the line L in V_k(C)?
bool in_locus(const JacobianData& jd, int r, int k, const Point& L);
LocusReport locus_report(const JacobianData& jd, int r, int k, const NumberField* field = nullptr);
std::vector<LocusReport> locus_chain(const JacobianData& jd, int r, const NumberField* field = nullptr);

}  // namespace jumploci

#endif
