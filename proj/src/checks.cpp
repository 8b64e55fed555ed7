#include "jumploci/checks.hpp"

#include <algorithm>

#include "jumploci/loci.hpp"

namespace jumploci {

namespace {

long choose2(long m) { return m < 0 ? 0 : m * (m - 1) / 2; }

CheckOutcome outcome(std::string name, bool pass, std::string detail = {}) { return {std::move(name), pass, std::move(detail)}; }

bool on_line(const Point& L, const Point& p) { return (L[0] * p[0] + L[1] * p[1] + L[2] * p[2]).is_zero(); }

}  // namespace

CheckOutcome check_n_duality(const JacobianData& jd) {
  const int T = jd.top_degree();
  for (int j = 0; j <= T; ++j)
    if (jd.n(j) != jd.n(T - j)) return outcome("n_duality", false, "n(" + std::to_string(j) + ") != n(" + std::to_string(T - j) + ")");
  return outcome("n_duality", true);
}

CheckOutcome check_dimension_identity(const JacobianData& jd) {
  const int d = jd.degree();
  for (int k = 0; k <= 2 * d; ++k) {
    long lhs = ar_dim(jd, k + 1) + ar_dim(jd, d - 5 - k) + choose2(d + k + 2) - 3 * choose2(k + 3);
    long rhs = jd.n(d + k) + jd.tjurina();
    if (lhs != rhs) return outcome("dimension_identity", false, "k=" + std::to_string(k) + ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
  }
  return outcome("dimension_identity", true, "0 <= k <= " + std::to_string(2 * d));
}

CheckOutcome check_generic_chern(const JacobianData& jd, int r) {
  const int d = jd.degree();
  SplittingType g = generic_splitting(d, r);
  const int lhs = (d - 1) * (d - 1) - g.d1 * g.d2, rhs = jd.tjurina() + jd.nu();
  return outcome("generic_type_tau_nu", lhs == rhs, std::to_string(lhs) + " vs " + std::to_string(rhs));
}

CheckOutcome check_hilbert_shape(const JacobianData& jd, int r) {
  HilbertShapeReport h = verify_hilbert_shape(jd, r);
  std::string bad;
  for (auto& e : h.entries)
    if (!e.pass) bad += " n(" + std::to_string(e.degree) + ")=" + std::to_string(e.actual) + " expected " + std::to_string(e.expected);
  return outcome("hilbert_shape", h.pass, h.regime + bad);
}

CheckOutcome check_line_facts(const JacobianData& jd, int r, const Point& L) {
  const int d = jd.degree(), nu = jd.nu();
  SplittingType s = splitting_along_line(jd, r, L);
  const int generic = generic_splitting(d, r).d1;
  const int order = generic - s.d1;
  bool ok = s.d1 + s.d2 == d - 1 && s.d1 >= 0 && s.d1 <= generic && s.d1 >= std::max(r - nu, 0) && order <= std::min(r, nu);
  return outcome("line_facts", ok, point_to_string(L) + " -> (" + std::to_string(s.d1) + "," + std::to_string(s.d2) + ")");
}

CheckOutcome check_generic_splitting(const JacobianData& jd, int r, std::mt19937_64& rng) {
  const int want = generic_splitting(jd.degree(), r).d1;
  GenericCheck g = check_generic(rng, [&](const Point& L) { return splitting_d1(jd, r, L) == want; });
  return outcome("generic_splitting", g.pass, std::to_string(g.attempts) + " line(s) drawn");
}

CheckOutcome check_weak_lefschetz(const JacobianData& jd, std::mt19937_64& rng) {
  GenericCheck g = check_generic(rng, [&](const Point& L) { return weak_lefschetz_holds(jd, L); });
  return outcome("weak_lefschetz", g.pass, std::to_string(g.attempts) + " line(s) drawn");
}

CheckOutcome check_strong_lefschetz(const JacobianData& jd, int r, std::mt19937_64& rng) {
  if (2 * r >= jd.degree()) return outcome("strong_lefschetz_plateau", true, "not applicable: 2r >= d");
  GenericCheck g = check_generic(rng, [&](const Point& L) { return strong_lefschetz_holds(jd, r, L); });
  return outcome("strong_lefschetz_plateau", g.pass, std::to_string(g.attempts) + " line(s) drawn");
}

std::vector<Point> probe_lines(const BourbakiData& bd, int count, std::mt19937_64& rng) {
  std::vector<Point> out;
  auto push = [&](const Point& L) {
    if (static_cast<int>(out.size()) >= count) return;
    for (auto& q : out)
      if (projectively_equal(q, L)) return;
    out.push_back(canonical_line(L));
  };
  for (auto& p : bd.supportPoints) {
    // lines through p are the kernel of p viewed as a functional
    auto [u, v] = points_on_line(p);
    push(u);
    push(Point{u[0] + v[0], u[1] + v[1], u[2] + v[2]});
  }
  while (static_cast<int>(out.size()) < count) push(random_line(rng));
  return out;
}

std::vector<LineComparison> compare_predictions(const JacobianData& jd, int r, const BourbakiData& bd, const std::vector<Point>& lines) {
  std::vector<LineComparison> out;
  const int d = jd.degree();
  for (auto& L : lines) {
    LineComparison c;
    c.line = L;
    c.prediction = predicted_splitting(d, r, intersection_multiplicity(bd, L));
    c.direct = splitting_along_line(jd, r, L);
    c.agrees = c.prediction.agrees(c.direct);
    out.push_back(c);
  }
  return out;
}

CheckOutcome check_arrangement(const JacobianData& jd, int r, const BourbakiData& bd, const std::vector<Point>& lines) {
  const std::string name = "jumping_lines_meet_support";
  if (2 * r > jd.degree() - 1) return outcome(name, true, "not applicable: 2r > d-1");
  if (bd.deficit != 0) return outcome(name, true, "skipped: support not fully K-rational");
  for (auto& L : lines) {
    bool meets = std::any_of(bd.supportPoints.begin(), bd.supportPoints.end(), [&](const Point& p) { return on_line(L, p); });
    if (meets != in_locus(jd, r, r - 1, L)) return outcome(name, false, point_to_string(L));
  }
  return outcome(name, true, std::to_string(lines.size()) + " lines");
}

}  // namespace jumploci
