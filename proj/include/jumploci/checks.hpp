#ifndef JUMPLOCI_CHECKS_HPP
#define JUMPLOCI_CHECKS_HPP

#include <random>
#include <string>
#include <vector>

#include "jumploci/bourbaki.hpp"
#include "jumploci/bundle.hpp"
#include "jumploci/syzygy.hpp"

namespace jumploci {

// Outcome of one theorem-level consistency check.
struct CheckOutcome {
  std::string name;
  bool pass = true;
  std::string detail;
};

CheckOutcome check_n_duality(const JacobianData& jd);
// ar(k+1) + ar(d-5-k) + C(d+k+2,2) - 3C(k+3,2) = n(d+k) + tau, 0 <= k <= 2d.
CheckOutcome check_dimension_identity(const JacobianData& jd);
// (d-1)^2 - d1 d2 = tau + nu for the generic splitting type.
CheckOutcome check_generic_chern(const JacobianData& jd, int r);
CheckOutcome check_hilbert_shape(const JacobianData& jd, int r);
// d1 + d2 = d-1, max(r-nu,0) <= d1 <= generic d1, order <= min(r,nu).
CheckOutcome check_line_facts(const JacobianData& jd, int r, const Point& L);
CheckOutcome check_generic_splitting(const JacobianData& jd, int r, std::mt19937_64& rng);
CheckOutcome check_weak_lefschetz(const JacobianData& jd, std::mt19937_64& rng);
CheckOutcome check_strong_lefschetz(const JacobianData& jd, int r, std::mt19937_64& rng);

// Lines through each support point (two per point, K-rational) followed by
// random lines, count in total.
std::vector<Point> probe_lines(const BourbakiData& bd, int count, std::mt19937_64& rng);

struct LineComparison {
  Point line;
  SplittingPrediction prediction;
  SplittingType direct;
  bool agrees = true;
};
std::vector<LineComparison> compare_predictions(const JacobianData& jd, int r, const BourbakiData& bd, const std::vector<Point>& lines);

// For 2r <= d-1: a probe line lies in V_{r-1} exactly when it meets the
// support.  Skipped (pass, with a note) when support points are missing.
CheckOutcome check_arrangement(const JacobianData& jd, int r, const BourbakiData& bd, const std::vector<Point>& lines);

}  // namespace jumploci

#endif
