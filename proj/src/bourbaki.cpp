#include "jumploci/bourbaki.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"
#include "jumploci/polyalg.hpp"

namespace jumploci {

Syzygy default_rho1(const JacobianData& jd, int r) {
  auto basis = ar_piece(jd, r);
  if (basis.empty()) throw MathError(ErrorCode::InvalidArgument, "AR(f) has no elements in degree " + std::to_string(r));
  return basis.front();
}

Syzygy combo_rho1(const JacobianData& jd, int r, const Scalar& t) {
  auto basis = ar_piece(jd, r);
  if (basis.size() < 2) throw MathError(ErrorCode::InvalidArgument, "a combination needs ar(f)_r >= 2");
  Syzygy s;
  s.degree = r;
  for (int i = 0; i < 3; ++i) s.comp[static_cast<std::size_t>(i)] = basis[0].comp[static_cast<std::size_t>(i)] + basis[1].comp[static_cast<std::size_t>(i)] * t;
  return s;
}

BourbakiData bourbaki_ideal(const JacobianData& jd, const SyzygyModuleData& sm, const Syzygy& rho1, const NumberField* field) {
  if (rho1.is_zero() || !is_syzygy(jd, rho1)) throw MathError(ErrorCode::InvalidArgument, "rho1 is not a nonzero syzygy");
  const int d = jd.degree(), r = sm.r;
  if (rho1.degree != r) throw MathError(ErrorCode::InvalidArgument, "rho1 must have degree mdr(f) = " + std::to_string(r));
  BourbakiData bd;
  bd.rho1 = rho1;
  for (std::size_t i = 0; i < sm.generators.size(); ++i) {
    Poly v = delta_quotient(jd, rho1, sm.generators[i]);
    if (v.is_zero()) continue;
    bd.generators.push_back(v.normalized());
    bd.sourceGenerator.push_back(static_cast<int>(i));
  }
  bd.formulaDegree = (d - 1) * (d - 1) - r * (d - r - 1) - jd.tjurina();
  if (bd.generators.empty()) throw MathError(ErrorCode::InternalInconsistency, "every generator is proportional to rho1");
  DimDegree dd = ideal_dim_degree(bd.generators);
  if (dd.dimension > 0) throw MathError(ErrorCode::DegreeFormulaMismatch, "Bourbaki ideal has a curve component");
  bd.degree = dd.residualLength;
  bd.unitIdeal = bd.degree == 0;
  if (bd.degree != bd.formulaDegree)
    throw MathError(ErrorCode::DegreeFormulaMismatch, "length " + std::to_string(bd.degree) + " but the formula gives " + std::to_string(bd.formulaDegree));
  if (bd.unitIdeal) return bd;
  PointSearch ps = rational_points(bd.generators, field);
  bd.distinctPoints = ps.degree;
  bd.supportPoints = ps.points;
  bd.supportMultiplicities = ps.multiplicities;
  int mass = 0;
  for (int m : ps.multiplicities) mass += m;
  bd.deficit = bd.degree - mass;
  return bd;
}

std::vector<Point> z_support(const BourbakiData& bd) { return bd.supportPoints; }

std::pair<Point, Point> points_on_line(const Point& L) {
  Matrix m(1, 3);
  for (int i = 0; i < 3; ++i) m.at(0, i) = L[static_cast<std::size_t>(i)];
  auto ker = kernel_basis(m);
  if (ker.size() != 2) throw MathError(ErrorCode::InvalidArgument, "zero vector is not a line");
  return {Point{ker[0][0], ker[0][1], ker[0][2]}, Point{ker[1][0], ker[1][1], ker[1][2]}};
}

int intersection_multiplicity(const BourbakiData& bd, const Point& L) {
  if (bd.unitIdeal) return 0;
  auto [P, Q] = points_on_line(L);
  std::vector<BinaryForm> forms;
  for (auto& g : bd.generators) forms.push_back(substitute_line(g, P, Q));
  return binary_gcd_degree(forms);
}

const char* prediction_kind_name(SplittingPrediction::Kind k) {
  switch (k) {
    case SplittingPrediction::Kind::Exact: return "exact";
    case SplittingPrediction::Kind::LowerBound: return "lower_bound";
    case SplittingPrediction::Kind::None: return "none";
  }
  return "none";
}

SplittingPrediction predicted_splitting(int d, int r, int mL) {
  SplittingPrediction p;
  p.mL = mL;
  if (mL == 0 && 2 * r <= d) {
    p.kind = SplittingPrediction::Kind::Exact;
    p.type = {std::min(r, d - 1 - r), std::max(r, d - 1 - r)};
  } else if (mL > 0 && 2 * r <= d - 1) {
    p.kind = SplittingPrediction::Kind::Exact;
    p.type = {std::min(r - mL, d - 1 - r + mL), std::max(r - mL, d - 1 - r + mL)};
  } else if (mL == 0) {
    p.kind = SplittingPrediction::Kind::LowerBound;
    p.lowerBound = d - 1 - r;
  }
  return p;
}

bool SplittingPrediction::agrees(const SplittingType& direct) const {
  switch (kind) {
    case Kind::Exact: return direct == type;
    case Kind::LowerBound: return direct.d1 >= lowerBound;
    case Kind::None: return true;
  }
  return true;
}

Poly support_pencils(const BourbakiData& bd) {
  Poly prod = Poly::term(Monomial(0, 0, 0));
  for (auto& p : bd.supportPoints) prod = prod * (p[0] * Poly::var(0) + p[1] * Poly::var(1) + p[2] * Poly::var(2));
  return prod;
}

}  // namespace jumploci
