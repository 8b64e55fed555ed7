#include "jumploci/bundle.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"

namespace jumploci {

ChernClasses chern(int d, int tau, int k) {
  ChernClasses c;
  c.c1 = 3 - d + 2L * k;
  c.c2 = 1L * d * d - (k + 3L) * d + 1L * k * k + 3L * k + 3 - tau;
  return c;
}

NormalizedChern normalized_chern(int d, int tau) {
  // E_C = T<C>(-1); the normalized bundle is E_C(d') for odd d and
  // E_C(d'-1) for even d, with d' = floor(d/2).
  const int dp = d / 2;
  NormalizedChern n;
  n.twist = d % 2 == 1 ? dp - 1 : dp - 2;
  n.classes = chern(d, tau, n.twist);
  return n;
}

const char* stability_name(Stability s) {
  switch (s) {
    case Stability::Unstable: return "Unstable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Stable: return "Stable";
  }
  return "Unstable";
}

Stability stability_class(int d, int r) {
  const int dp = d / 2;
  if (d % 2 == 1) {
    if (r > dp) return Stability::Stable;
    return r == dp ? Stability::StrictlySemistable : Stability::Unstable;
  }
  return r >= dp ? Stability::Stable : Stability::Unstable;
}

SplittingType generic_splitting(int d, int r) {
  int d1 = std::min(r, (d - 1) / 2);
  return {d1, d - 1 - d1};
}

Point canonical_line(const Point& L) {
  if (L[0].is_zero() && L[1].is_zero() && L[2].is_zero()) throw MathError(ErrorCode::InvalidArgument, "the zero vector is not a line");
  return canonical_point(L);
}

Poly line_form(const Point& L) { return Poly::var(0) * L[0] + Poly::var(1) * L[1] + Poly::var(2) * L[2]; }

Matrix multiplication_at(const JacobianData& jd, int j, const Point& L) {
  const auto& m = jd.variable_action(j);
  return L[0] * m[0] + L[1] * m[1] + L[2] * m[2];
}

int splitting_d1(const JacobianData& jd, int r, const Point& L) {
  canonical_line(L);
  const int d = jd.degree();
  for (int k = 0; k < r; ++k) {
    const int j = k + d - 2;
    if (jd.n(j) == 0) continue;
    Matrix M = multiplication_at(jd, j, L);
    if (rank(M) < M.cols()) return k;
  }
  return r;
}

SplittingType splitting_along_line(const JacobianData& jd, int r, const Point& L) {
  int d1 = splitting_d1(jd, r, L);
  return {d1, jd.degree() - 1 - d1};
}

int jumping_order(const JacobianData& jd, int r, const Point& L) {
  return generic_splitting(jd.degree(), r).d1 - splitting_d1(jd, r, L);
}

Point random_line(std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  for (;;) {
    Point p{Scalar(dist(rng)), Scalar(dist(rng)), Scalar(dist(rng))};
    if (!(p[0].is_zero() && p[1].is_zero() && p[2].is_zero())) return p;
  }
}

bool weak_lefschetz_holds(const JacobianData& jd, const Point& L) {
  // s indexes the source degree of N_s -> N_{s+1}
  const int T = jd.top_degree();
  const int half = (T + 1) / 2;
  for (int s = 0; s <= T; ++s) {
    const int src = jd.n(s), dst = jd.n(s + 1);
    const int rk = src == 0 || dst == 0 ? 0 : rank(multiplication_at(jd, s, L));
    if (s < half ? rk != src : rk != dst) return false;
  }
  return true;
}

bool strong_lefschetz_holds(const JacobianData& jd, int r, const Point& L) {
  const int d = jd.degree();
  if (2 * r >= d) return true;
  const int lo = d + r - 3, hi = 2 * d - r - 3;
  for (int p = lo; p < hi; ++p) {
    Matrix acc = Matrix::identity(jd.n(p));
    for (int q = p + 1; q <= hi; ++q) {
      acc = multiplication_at(jd, q - 1, L) * acc;
      if (acc.rows() != acc.cols() || rank(acc) != acc.rows()) return false;
    }
  }
  return true;
}

}  // namespace jumploci
