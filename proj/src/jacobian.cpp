#include "jumploci/jacobian.hpp"

#include "jumploci/errors.hpp"
#include "jumploci/polyalg.hpp"

namespace jumploci {

bool is_reduced(const Poly& f) {
  Partials p = partials(f);
  return gcd({f, p.fx, p.fy, p.fz}).degree() == 0;
}

void validate_curve(const Poly& f) {
  if (f.is_zero() || !f.is_homogeneous()) throw MathError(ErrorCode::NonHomogeneous, "the curve equation must be a nonzero form");
  if (f.degree() < 3) throw MathError(ErrorCode::InvalidArgument, "the curve must have degree at least 3");
  if (!is_reduced(f)) throw MathError(ErrorCode::NonReducedSuspected, "the curve equation has a repeated factor");
}

JacobianData::JacobianData(const Poly& f) : f_(f), d_(f.degree()) {
  validate_curve(f);
  grad_ = partials(f);
  engine_ = std::make_shared<GradedQuotient>(std::vector<Poly>{grad_.fx, grad_.fy, grad_.fz});
  const int seed = 3 * d_ - 5;
  engine_->compute_to(seed + 1);
  engine_->saturate_from(seed);
  tau_ = engine_->quotient_dim(seed);
  if (engine_->quotient_dim(seed + 1) != tau_)
    throw MathError(ErrorCode::NonReducedSuspected, "Hilbert function of the Jacobian algebra did not stabilize");
}

int JacobianData::m(int k) const {
  if (k < 0) return 0;
  if (k <= engine_->top()) return engine_->quotient_dim(k);
  return tau_;
}

int JacobianData::n(int k) const {
  if (k < 0 || k >= engine_->saturation_seed()) return 0;
  return engine_->saturation_kernel(k).dim();
}

std::map<int, int> JacobianData::n_table() const {
  std::map<int, int> t;
  for (int k = 0; k <= top_degree(); ++k) t[k] = n(k);
  return t;
}

const JacobianData::NPiece& JacobianData::npiece(int k) const {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = nCache_.find(k);
  if (it != nCache_.end()) return *it->second;
  auto piece = std::make_unique<NPiece>();
  const int want = n(k);
  if (want > 0) {
    const EchelonSpace& ker = engine_->saturation_kernel(k);
    EchelonSpace acc(m(k));
    auto basis = monomial_basis(k);
    for (auto& mono : basis) {
      if (static_cast<int>(piece->classes.size()) == want) break;
      Poly p = Poly::term(mono);
      Vec cls = engine_->normal_form(k, p);
      if (!ker.contains(cls)) continue;
      if (!acc.insert(cls)) continue;
      piece->reps.push_back(p);
      piece->classes.push_back(cls);
    }
    for (auto& row : ker.rows()) {
      if (static_cast<int>(piece->classes.size()) == want) break;
      if (!acc.insert(row)) continue;
      piece->reps.push_back(engine_->lift(k, row));
      piece->classes.push_back(row);
    }
  }
  auto& ref = *piece;
  nCache_.emplace(k, std::move(piece));
  return ref;
}

const std::vector<Poly>& JacobianData::n_basis(int k) const { return npiece(k).reps; }

const std::vector<Vec>& JacobianData::n_basis_classes(int k) const { return npiece(k).classes; }

Vec JacobianData::n_coordinates_of_class(int k, const Vec& cls) const {
  const auto& classes = n_basis_classes(k);
  if (classes.empty()) {
    if (!is_zero_vec(cls) && !engine_->saturation_kernel(k).contains(cls))
      throw MathError(ErrorCode::NotInSpan, "class outside the saturation");
    return {};
  }
  return coordinates_in_span(cls, classes);
}

Vec JacobianData::n_coordinates(int k, const Poly& g) const {
  if (g.is_zero()) return Vec(static_cast<std::size_t>(n(k)));
  if (k >= engine_->saturation_seed()) {
    if (!engine_->contains(g)) throw MathError(ErrorCode::NotInSpan, "form outside the saturation");
    return {};
  }
  return n_coordinates_of_class(k, engine_->normal_form(k, g));
}

const std::array<Matrix, 3>& JacobianData::variable_action(int j) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = actionCache_.find(j);
    if (it != actionCache_.end()) return *it->second;
  }
  auto maps = std::make_unique<std::array<Matrix, 3>>();
  for (int w = 0; w < 3; ++w) (*maps)[static_cast<std::size_t>(w)] = n_multiplication(*this, j, Poly::var(w));
  std::lock_guard<std::mutex> lock(mutex_);
  auto& slot = actionCache_[j];
  if (!slot) slot = std::move(maps);
  return *slot;
}

Matrix n_multiplication(const JacobianData& jd, int j, const Poly& g) {
  const int e = g.degree();
  const int cols = jd.n(j), rows = jd.n(j + e);
  Matrix M(rows, cols);
  if (rows == 0 || cols == 0) return M;
  const auto& reps = jd.n_basis(j);
  for (int c = 0; c < cols; ++c) {
    Vec v = jd.n_coordinates(j + e, g * reps[static_cast<std::size_t>(c)]);
    for (int i = 0; i < rows; ++i) M.at(i, c) = v[static_cast<std::size_t>(i)];
  }
  return M;
}

GradedSubspace jacobian_piece(const JacobianData& jd, int k) {
  if (k < 0) return GradedSubspace{k, EchelonSpace(0)};
  if (k > jd.engine().top()) {
    // beyond the computed window, span the multiples directly
    GradedSubspace g{k, EchelonSpace(static_cast<int>(dim_forms(k)))};
    for (auto& m : monomial_basis(k - jd.degree() + 1))
      for (int i = 0; i < 3; ++i) g.space.insert((Poly::term(m) * jd.gradient()[i]).coefficients(k));
    return g;
  }
  return jd.engine().ideal_piece(k);
}

GradedSubspace saturate(const JacobianData& jd, int k) {
  if (k >= jd.engine().saturation_seed()) return jacobian_piece(jd, k);
  return jd.engine().saturated_piece(k);
}

int tjurina(const Poly& f) { return JacobianData(f).tjurina(); }

HilbertShapeReport verify_hilbert_shape(const JacobianData& jd, int r) {
  HilbertShapeReport rep;
  const int d = jd.degree();
  const int T = jd.top_degree();
  const int nu = jd.nu();
  auto add = [&](int j, int expected) {
    int actual = jd.n(j);
    rep.entries.push_back({j, expected, actual, expected == actual});
    if (expected != actual) rep.pass = false;
  };
  if (2 * r >= d) {
    rep.regime = "stable";
    for (int j = 2 * d - 4 - r; j <= d - 2 + r; ++j) {
      int expected;
      if (T % 2 == 1) expected = nu - (j - T / 2) * (j - (T + 1) / 2);
      else expected = nu - (j - T / 2) * (j - T / 2);
      add(j, expected);
    }
  } else {
    rep.regime = "unstable";
    for (int j = d + r - 3; j <= 2 * d - r - 3; ++j) add(j, nu);
    int edge = nu == 0 ? 0 : nu - 1;
    add(d + r - 4, edge);
    add(2 * d - r - 2, edge);
  }
  return rep;
}

}  // namespace jumploci
