#include "jumploci/loci.hpp"

#include <algorithm>
#include <numeric>

#include "jumploci/bundle.hpp"
#include "jumploci/errors.hpp"
#include "jumploci/polyalg.hpp"
#include "jumploci/univariate.hpp"

namespace jumploci {

namespace {

std::vector<std::size_t> subset_first(int k) {
  std::vector<std::size_t> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  return idx;
}

bool subset_next(std::vector<std::size_t>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  for (int i = k - 1; i >= 0; --i) {
    if (idx[static_cast<std::size_t>(i)] < static_cast<std::size_t>(n - k + i)) {
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j) - 1] + 1;
      return true;
    }
  }
  return false;
}

Point add_points(const std::vector<Point>& list, const Point& p, bool& added) {
  Point c = canonical_point(p);
  added = std::none_of(list.begin(), list.end(), [&](const Point& q) { return projectively_equal(q, c); });
  return c;
}

}  // namespace

Matrix LinearMatrix::at(const Point& p) const { return p[0] * m[0] + p[1] * m[1] + p[2] * m[2]; }

std::vector<std::vector<Poly>> LinearMatrix::symbolic() const {
  std::vector<std::vector<Poly>> out(static_cast<std::size_t>(rows()), std::vector<Poly>(static_cast<std::size_t>(cols())));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j)
      for (int w = 0; w < 3; ++w) {
        const Scalar& s = m[static_cast<std::size_t>(w)].at(i, j);
        if (!s.is_zero()) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += Poly::var(w) * s;
      }
  return out;
}

LinearMatrix multiplication_matrices(const JacobianData& jd, int k) {
  LinearMatrix lm;
  lm.m = jd.variable_action(jd.degree() - 2 + k);
  return lm;
}

Poly square_determinant(const std::vector<std::vector<Poly>>& symbolic, std::uint64_t seed) {
  Poly det = determinant(symbolic);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> dist(-50, 50);
  const std::size_t n = symbolic.size();
  for (int t = 0; t < 5; ++t) {
    Point p{Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng))};
    Matrix M(static_cast<int>(n), static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) M.at(static_cast<int>(i), static_cast<int>(j)) = symbolic[i][j].is_zero() ? Scalar() : symbolic[i][j].evaluate(p);
    if (det.evaluate(p) != determinant(M)) throw MathError(ErrorCode::VerificationMismatch, "symbolic determinant disagrees with an evaluation");
  }
  return det;
}

Poly square_determinant(const LinearMatrix& lm) {
  if (lm.rows() != lm.cols() || lm.rows() == 0) throw MathError(ErrorCode::InvalidArgument, "square_determinant needs a nonempty square matrix");
  return square_determinant(lm.symbolic());
}

double minor_work(int rows, int cols) {
  const int k = std::min(rows, cols), n = std::max(rows, cols);
  double count = 1;
  for (int i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
  return count * k * k * k;
}

std::vector<Poly> minor_ideal(const LinearMatrix& lm) {
  auto sym = lm.symbolic();
  const int R = lm.rows(), C = lm.cols();
  const int k = std::min(R, C);
  std::vector<Poly> out;
  if (k == 0) return out;
  auto idx = subset_first(k);
  do {
    std::vector<std::vector<Poly>> sub(static_cast<std::size_t>(k), std::vector<Poly>(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        std::size_t r = R >= C ? idx[static_cast<std::size_t>(i)] : static_cast<std::size_t>(i);
        std::size_t c = R >= C ? static_cast<std::size_t>(j) : idx[static_cast<std::size_t>(j)];
        sub[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = sym[r][c];
      }
    Poly m = determinant(std::move(sub));
    if (!m.is_zero()) out.push_back(m);
  } while (subset_next(idx, std::max(R, C)));
  return out;
}

namespace {

// Length of a zero-dimensional ideal together with a degree k at which
// (S/I)_k and (S/I)_{k+1} already equal the saturated quotient.
struct LengthWindow {
  int length = 0;
  int k = 0;
  int bound = 0;
};

LengthWindow length_window(GradedQuotient& Q, const std::vector<Poly>& g, int degreeBound) {
  int maxdeg = 0;
  for (auto& p : g) maxdeg = std::max(maxdeg, p.degree());
  if (gcd(g).degree() > 0) throw MathError(ErrorCode::InvalidArgument, "generators share a common factor");
  const int bound = degreeBound < 0 ? 8 * maxdeg + 16 : degreeBound;
  {
    // lowest constant window of length 4, confirmed against the saturation
    // seeded at its top: that Hilbert function must rise monotonically to c.
    // Pieces are built only as far as the window needs.
    for (int k0 = maxdeg; k0 + 3 <= bound; ++k0) {
      Q.compute_to(k0 + 3);
      const int c = Q.quotient_dim(k0);
      bool flat = true;
      for (int k = k0 + 1; k <= k0 + 3; ++k) flat = flat && Q.quotient_dim(k) == c;
      if (!flat) continue;
      Q.saturate_from(k0 + 3);
      bool ok = true;
      int prev = 0;
      for (int k = 0; k <= k0 + 3 && ok; ++k) {
        int h = Q.saturated_quotient_dim(k);
        ok = h >= prev && h <= c;
        prev = h;
      }
      if (ok && prev == c && Q.saturated_quotient_dim(k0 + 2) == c) return {c, k0 + 2, bound};
    }
  }
  throw MathError(ErrorCode::BoundTooSmall, "Hilbert function did not stabilize below degree " + std::to_string(bound));
}

std::vector<Poly> nonzero(const std::vector<Poly>& gens) {
  std::vector<Poly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  if (g.empty()) throw MathError(ErrorCode::InvalidArgument, "zero ideal is not zero-dimensional");
  return g;
}

// Matrix of multiplication by a linear form (S/I)_k -> (S/I)_{k+1} in the
// standard monomial bases.
Matrix linear_action(const GradedQuotient& Q, int k, const Poly& ell) {
  const int c = Q.quotient_dim(k);
  Matrix M(Q.quotient_dim(k + 1), c);
  for (int i = 0; i < c; ++i) {
    Vec e(static_cast<std::size_t>(c));
    e[static_cast<std::size_t>(i)] = Scalar(1);
    Vec img = Q.normal_form(k + 1, ell * Q.lift(k, e));
    for (int r = 0; r < M.rows(); ++r) M.at(r, i) = img[static_cast<std::size_t>(r)];
  }
  return M;
}

Poly random_linear(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-20, 20);
  for (;;) {
    Poly ell = Poly::var(0) * Scalar(dist(rng)) + Poly::var(1) * Scalar(dist(rng)) + Poly::var(2) * Scalar(dist(rng));
    if (!ell.is_zero()) return ell;
  }
}

// On the saturated piece (S/I)_k, multiplication by a form ell vanishing at
// no point is invertible, and ell^{-1} * g has the values g(P)/ell(P) as
// eigenvalues, with the local lengths as multiplicities.
// Characteristic polynomial of multiplication by g/ell on (S/I)_k.
std::optional<UPoly> ratio_charpoly(const GradedQuotient& Q, int k, const Poly& ell, const Poly& g) {
  return pencil_charpoly(linear_action(Q, k, ell), linear_action(Q, k, g));
}

// Distinct eigenvalues of a random ratio operator count the points once the
// random form separates them; the larger of two draws is kept.
int distinct_points(const GradedQuotient& Q, const LengthWindow& w) {
  if (w.length == 0) return 0;
  std::mt19937_64 rng(0xd157);
  int best = 0;
  for (int trial = 0, good = 0; trial < 8 && good < 2; ++trial) {
    auto chi = ratio_charpoly(Q, w.k, random_linear(rng), random_linear(rng));
    if (!chi) continue;
    best = std::max(best, squarefree_part(*chi).degree());
    ++good;
  }
  if (best == 0) throw MathError(ErrorCode::InternalInconsistency, "no invertible multiplication found for a nonempty point scheme");
  return best;
}

}  // namespace

int zero_dim_degree(const std::vector<Poly>& gens, int degreeBound, int* boundUsed) {
  std::vector<Poly> g = nonzero(gens);
  GradedQuotient Q(g);
  LengthWindow w = length_window(Q, g, degreeBound);
  if (boundUsed) *boundUsed = w.bound;
  return w.length;
}

ZeroDimCount zero_dim_count(const std::vector<Poly>& gens, int degreeBound) {
  std::vector<Poly> g = nonzero(gens);
  GradedQuotient Q(g);
  LengthWindow w = length_window(Q, g, degreeBound);
  ZeroDimCount out;
  out.length = w.length;
  out.points = distinct_points(Q, w);
  out.boundUsed = w.bound;
  return out;
}

DimDegree ideal_dim_degree(const std::vector<Poly>& gens, int degreeBound) {
  DimDegree out;
  std::vector<Poly> g;
  for (auto& p : gens)
    if (!p.is_zero()) g.push_back(p);
  if (g.empty()) {
    out.dimension = 2;
    return out;
  }
  Poly common = gcd(g);
  std::vector<Poly> residual;
  for (auto& p : g) residual.push_back(exact_divide(p, common));
  out.residualGenerators = residual;
  ZeroDimCount zc = zero_dim_count(residual, degreeBound);
  out.residualLength = zc.length;
  out.residualPoints = zc.points;
  out.boundUsed = zc.boundUsed;
  if (common.degree() > 0) {
    out.dimension = 1;
    out.curve = common;
    out.reducedCurveDegree = squarefree_part(common).degree();
    out.degree = out.reducedCurveDegree;
  } else {
    out.dimension = zc.length > 0 ? 0 : -1;
    out.degree = zc.points;
  }
  return out;
}

bool vanishes_at(const std::vector<Poly>& gens, const Point& p) {
  for (auto& g : gens)
    if (!g.evaluate(p).is_zero()) return false;
  return true;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p); }

// Exhaustive search over primitive integer points of height <= H, with a
// modular prefilter.  Rational generators only.
std::vector<Point> height_search(const std::vector<Poly>& gens, int H) {
  const std::uint64_t p = 2305843009213693951ULL;
  struct ModTerm {
    std::array<int, 3> e;
    std::uint64_t c;
  };
  std::vector<std::vector<ModTerm>> mg;
  for (auto& g : gens) {
    std::vector<ModTerm> t;
    const Poly gn = g.normalized();
    for (auto& [m, s] : gn.terms()) {
      mpz_class num = s.rational().get_num();
      t.push_back({m.e, static_cast<std::uint64_t>(mpz_fdiv_ui(num.get_mpz_t(), p))});
    }
    mg.push_back(std::move(t));
  }
  int maxdeg = 0;
  for (auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
  const int span = 2 * H + 1;
  // powers[v + H][e] = v^e mod p
  std::vector<std::vector<std::uint64_t>> pw(static_cast<std::size_t>(span), std::vector<std::uint64_t>(static_cast<std::size_t>(maxdeg) + 1));
  for (int v = -H; v <= H; ++v) {
    std::uint64_t base = v >= 0 ? static_cast<std::uint64_t>(v) : p - static_cast<std::uint64_t>(-v);
    pw[static_cast<std::size_t>(v + H)][0] = 1;
    for (int e = 1; e <= maxdeg; ++e) pw[static_cast<std::size_t>(v + H)][static_cast<std::size_t>(e)] = mulmod(pw[static_cast<std::size_t>(v + H)][static_cast<std::size_t>(e) - 1], base, p);
  }
  std::vector<Point> out;
  auto check = [&](int a, int b, int c) {
    if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) return;
    for (auto& t : mg) {
      std::uint64_t acc = 0;
      for (auto& term : t) {
        std::uint64_t v = mulmod(pw[static_cast<std::size_t>(a + H)][static_cast<std::size_t>(term.e[0])], pw[static_cast<std::size_t>(b + H)][static_cast<std::size_t>(term.e[1])], p);
        v = mulmod(v, pw[static_cast<std::size_t>(c + H)][static_cast<std::size_t>(term.e[2])], p);
        acc = mulmod(v, term.c, p) + acc;
        if (acc >= p) acc -= p;
      }
      if (acc != 0) return;
    }
    Point pt{Scalar(a), Scalar(b), Scalar(c)};
    if (vanishes_at(gens, pt)) out.push_back(canonical_point(pt));
  };
  // first nonzero coordinate positive
  for (int a = 1; a <= H; ++a)
    for (int b = -H; b <= H; ++b)
      for (int c = -H; c <= H; ++c) check(a, b, c);
  for (int b = 1; b <= H; ++b)
    for (int c = -H; c <= H; ++c) check(0, b, c);
  check(0, 0, 1);
  return out;
}

}  // namespace

PointSearch rational_points(const std::vector<Poly>& gensIn, const NumberField* field, int heightBound, std::uint64_t seed) {
  std::vector<Poly> gens = nonzero(gensIn);
  PointSearch out;
  GradedQuotient Q(gens);
  LengthWindow w = length_window(Q, gens, -1);
  out.length = w.length;
  out.degree = distinct_points(Q, w);
  if (out.degree == 0) return out;
  std::mt19937_64 rng(seed);
  bool solved = false;
  for (int attempt = 0; attempt < 5 && !solved; ++attempt) {
    // normalize ell(P) = 1; the z-coefficient recovers the last coordinate
    Poly ell = random_linear(rng);
    const Scalar cz = ell.coeff(Monomial(0, 0, 1));
    if (cz.is_zero()) continue;
    auto chix = ratio_charpoly(Q, w.k, ell, Poly::var(0));
    if (!chix) continue;
    auto chiy = ratio_charpoly(Q, w.k, ell, Poly::var(1));
    const auto xs = roots_in_field(*chix, field);
    const auto ys = roots_in_field(*chiy, field);
    const Scalar cx = ell.coeff(Monomial(1, 0, 0)), cy = ell.coeff(Monomial(0, 1, 0));
    for (auto& x0 : xs)
      for (auto& y0 : ys) {
        Point cand{x0, y0, (Scalar(1) - cx * x0 - cy * y0) / cz};
        if (!vanishes_at(gens, cand)) continue;
        bool added;
        Point c = add_points(out.points, cand, added);
        if (added) out.points.push_back(c);
      }
    solved = true;
  }
  if (!solved) throw MathError(ErrorCode::ResultantDegenerate, "no invertible multiplication found after 5 attempts");
  bool rationalGens = std::all_of(gens.begin(), gens.end(), [](const Poly& g) {
    return std::all_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.second.is_rational(); });
  });
  if (static_cast<int>(out.points.size()) < out.degree && rationalGens && heightBound > 0) {
    out.heightSearchRun = true;
    for (auto& q : height_search(gens, heightBound)) {
      bool added;
      Point c = add_points(out.points, q, added);
      if (added) out.points.push_back(c);
    }
  }
  std::sort(out.points.begin(), out.points.end(), [](const Point& a, const Point& b) { return point_to_string(a) < point_to_string(b); });
  out.deficit = out.degree - static_cast<int>(out.points.size());
  // local lengths: eigenvalue multiplicities of an operator that separates
  // all points (its squarefree degree equals the point count)
  for (int attempt = 0; attempt < 8 && out.multiplicities.empty() && !out.points.empty(); ++attempt) {
    Poly ell = random_linear(rng), g = random_linear(rng);
    if (std::any_of(out.points.begin(), out.points.end(), [&](const Point& p) { return ell.evaluate(p).is_zero(); })) continue;
    auto chiOpt = ratio_charpoly(Q, w.k, ell, g);
    if (!chiOpt) continue;
    const UPoly& chi = *chiOpt;
    if (squarefree_part(chi).degree() != out.degree) continue;
    std::vector<int> mult;
    for (auto& p : out.points) mult.push_back(root_multiplicity(chi, g.evaluate(p) / ell.evaluate(p)));
    out.multiplicities = std::move(mult);
  }
  if (out.multiplicities.size() != out.points.size()) throw MathError(ErrorCode::InternalInconsistency, "no separating operator for local lengths");
  return out;
}

Poly hulek_second_kind(const JacobianData& jd) {
  const int d = jd.degree();
  if (d % 2 != 0) throw MathError(ErrorCode::InvalidArgument, "second-kind determinant needs even degree");
  const int j = 3 * (d / 2) - 4;
  const int n = jd.n(j);
  if (n != jd.n(j + 2) || n == 0) throw MathError(ErrorCode::InvalidArgument, "N(f) pieces of unequal or zero dimension");
  std::vector<std::vector<Poly>> sym(static_cast<std::size_t>(n), std::vector<Poly>(static_cast<std::size_t>(n)));
  for (auto& mu : monomial_basis(2)) {
    // coefficient of x^mu in (ax+by+cz)^2
    int mult = (mu.e[0] == 2 || mu.e[1] == 2 || mu.e[2] == 2) ? 1 : 2;
    Matrix M = n_multiplication(jd, j, Poly::term(mu));
    Poly coeff = Poly::term(mu, Scalar(mult));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if (!M.at(r, c).is_zero()) sym[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] += coeff * M.at(r, c);
  }
  Poly det = square_determinant(sym);
  if (det.is_zero()) throw MathError(ErrorCode::UnexpectedZeroDeterminant, "second-kind determinant vanishes identically");
  return det;
}

bool in_locus(const JacobianData& jd, int r, int k, const Point& L) {
  if (k >= r) return true;
  const int j = jd.degree() - 2 + k;
  if (jd.n(j) == 0) return false;
  Matrix M = multiplication_at(jd, j, L);
  return rank(M) < M.cols();
}

LocusReport locus_report(const JacobianData& jd, int r, int k, const NumberField* field) {
  LocusReport rep;
  rep.k = k;
  const int d = jd.degree();
  rep.cols = jd.n(d - 2 + k);
  rep.rows = jd.n(d - 1 + k);
  rep.delta = rep.rows;
  if (k >= r) {
    rep.shape = "full";
    rep.dimension = 2;
    return rep;
  }
  if (rep.cols == 0) {
    rep.shape = "empty";
    rep.dimension = -1;
    return rep;
  }
  LinearMatrix lm = multiplication_matrices(jd, k);
  if (rep.rows < rep.cols) {
    // never injective
    rep.shape = "full";
    rep.dimension = 2;
    return rep;
  }
  if (rep.rows == rep.cols) {
    rep.shape = "square";
    rep.dimension = 1;
    rep.degree = rep.rows;
    if (rep.rows <= kSymbolicDeterminantCap) {
      Poly det = square_determinant(lm);
      if (det.is_zero()) throw MathError(ErrorCode::UnexpectedZeroDeterminant, "jumping determinant vanishes identically");
      if (det.degree() == 0) {
        rep.shape = "empty";
        rep.dimension = -1;
        rep.degree = 0;
        return rep;
      }
      rep.definingPolynomial = det;
      rep.reducedCurve = squarefree_part(det);
      rep.degree = rep.reducedCurve->degree();
    }
    return rep;
  }
  if (minor_work(rep.rows, rep.cols) > kMinorWorkCap) {
    rep.shape = "minors_unexpanded";
    rep.dimension = -2;
    return rep;
  }
  rep.shape = "minors";
  rep.minorGenerators = minor_ideal(lm);
  DimDegree dd = ideal_dim_degree(rep.minorGenerators);
  rep.dimension = dd.dimension;
  rep.degree = dd.degree;
  rep.length = dd.residualLength;
  if (dd.dimension == 1) rep.reducedCurve = squarefree_part(dd.curve);
  if (dd.residualLength > 0) {
    PointSearch ps = rational_points(dd.residualGenerators, field);
    for (auto& p : ps.points)
      if (dd.dimension != 1 || !rep.reducedCurve->evaluate(p).is_zero()) rep.rationalPoints.push_back(p);
    rep.pointDeficit = dd.dimension == 1 ? 0 : ps.deficit;
  }
  return rep;
}

std::vector<LocusReport> locus_chain(const JacobianData& jd, int r, const NumberField* field) {
  std::vector<LocusReport> out;
  const int top = generic_splitting(jd.degree(), r).d1;
  for (int k = 0; k <= top; ++k) out.push_back(locus_report(jd, r, k, field));
  return out;
}

}  // namespace jumploci
