#ifndef JUMPLOCI_BOURBAKI_HPP
#define JUMPLOCI_BOURBAKI_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jumploci/bundle.hpp"
#include "jumploci/loci.hpp"
#include "jumploci/syzygy.hpp"

namespace jumploci {

// The ideal generated by v(rho) = det((x,y,z), rho1, rho) / f over the
// minimal generators rho of AR(f), and the zero scheme it defines.  All
// points here are in the primal plane.
struct BourbakiData {
  Syzygy rho1;
  std::vector<Poly> generators;
  std::vector<int> sourceGenerator;  // index into the minimal generators
  int degree = 0;                    // scheme length
  int formulaDegree = 0;             // (d-1)^2 - r(d-r-1) - tau
  bool unitIdeal = false;
  int distinctPoints = 0;
  std::vector<Point> supportPoints;  // K-rational, each checked on every generator
  std::vector<int> supportMultiplicities;
  int deficit = 0;  // degree minus the total length at the points found
};

// Lowest echelon basis vector of AR(f)_r.
Syzygy default_rho1(const JacobianData& jd, int r);
// b1 + t*b2 for the first two echelon basis vectors; InvalidArgument when
// ar(f)_r < 2.
Syzygy combo_rho1(const JacobianData& jd, int r, const Scalar& t);

// Throws DivisibilityFailure and DegreeFormulaMismatch.
BourbakiData bourbaki_ideal(const JacobianData& jd, const SyzygyModuleData& sm, const Syzygy& rho1, const NumberField* field = nullptr);

std::vector<Point> z_support(const BourbakiData& bd);

// Two points spanning the line with dual coordinates L.
std::pair<Point, Point> points_on_line(const Point& L);
// m_L: degree of the gcd of the generators restricted to L.  Throws
// AllRestrictionsZero.
int intersection_multiplicity(const BourbakiData& bd, const Point& L);

struct SplittingPrediction {
  enum class Kind { Exact, LowerBound, None };
  Kind kind = Kind::None;
  SplittingType type;  // for Exact
  int lowerBound = 0;  // d1 >= lowerBound, for LowerBound
  int mL = 0;
  bool agrees(const SplittingType& direct) const;
};
const char* prediction_kind_name(SplittingPrediction::Kind k);
SplittingPrediction predicted_splitting(int d, int r, int mL);

// Product of the pencils a*p0 + b*p1 + c*p2 over the support points: the
// dual curve of lines meeting the support.
Poly support_pencils(const BourbakiData& bd);

}  // namespace jumploci

#endif
