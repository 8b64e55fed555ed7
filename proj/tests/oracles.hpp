// Brute-force reference computations used only by the tests.  They share
// the polynomial and matrix types with the library but none of its graded
// engine, so they are independent of the normal-form machinery.
#ifndef JUMPLOCI_TESTS_ORACLES_HPP
#define JUMPLOCI_TESTS_ORACLES_HPP

#include <random>
#include <string>
#include <vector>

#include "jumploci/linalg.hpp"
#include "jumploci/parse.hpp"
#include "jumploci/poly.hpp"

namespace oracle {

using namespace jumploci;

inline Poly P(const std::string& s, const NumberField* k = nullptr) { return parse_poly(s, k); }

// Span of {m * g} for all g in gens and monomials m completing degree k.
inline EchelonSpace ideal_span(const std::vector<Poly>& gens, int k) {
  EchelonSpace sp(static_cast<int>(dim_forms(k)));
  for (auto& g : gens) {
    if (g.is_zero() || g.degree() > k) continue;
    for (auto& m : monomial_basis(k - g.degree())) sp.insert((Poly::term(m) * g).coefficients(k));
  }
  return sp;
}

inline std::vector<Poly> grads(const Poly& f) {
  Partials p = partials(f);
  return {p.fx, p.fy, p.fz};
}

inline int jacobian_dim(const Poly& f, int k) { return ideal_span(grads(f), k).dim(); }

inline int tau(const Poly& f) {
  int k = 3 * f.degree() - 5;
  return static_cast<int>(dim_forms(k)) - jacobian_dim(f, k);
}

// dim of the saturation in degree k: g with g*x^e, g*y^e, g*z^e in J once
// k+e reaches the stable range.
inline int saturation_dim(const Poly& f, int k) {
  const int d = f.degree();
  int e = std::max(0, 3 * d - 5 - k);
  int N = k + e;
  EchelonSpace J = ideal_span(grads(f), N);
  auto basis = monomial_basis(k);
  // columns: monomials of degree k; rows: three reduced copies of S_N
  int n = static_cast<int>(dim_forms(N));
  Matrix M(3 * n, static_cast<int>(basis.size()));
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (int w = 0; w < 3; ++w) {
      Monomial pw;
      pw.e[static_cast<std::size_t>(w)] = e;
      Vec r = J.reduce((Poly::term(basis[j]) * Poly::term(pw)).coefficients(N));
      for (int i = 0; i < n; ++i) M.at(w * n + i, static_cast<int>(j)) = r[static_cast<std::size_t>(i)];
    }
  return static_cast<int>(basis.size()) - rank_exact(M);
}

inline int n_dim(const Poly& f, int k) {
  if (k < 0) return 0;
  return saturation_dim(f, k) - jacobian_dim(f, k);
}

inline int ar_dim(const Poly& f, int k) {
  if (k < 0) return 0;
  auto g = grads(f);
  int d = f.degree();
  auto basis = monomial_basis(k);
  int n = static_cast<int>(basis.size());
  Matrix M(static_cast<int>(dim_forms(k + d - 1)), 3 * n);
  for (int w = 0; w < 3; ++w)
    for (int j = 0; j < n; ++j) {
      Vec c = (Poly::term(basis[static_cast<std::size_t>(j)]) * g[static_cast<std::size_t>(w)]).coefficients(k + d - 1);
      for (int i = 0; i < M.rows(); ++i) M.at(i, w * n + j) = c[static_cast<std::size_t>(i)];
    }
  return 3 * n - rank_exact(M);
}

// Span of the multiples of the three Koszul relations in degree k.
inline int koszul_span_dim(const Poly& f, int k) {
  auto g = grads(f);
  int d = f.degree();
  if (k < d - 1) return 0;
  std::vector<std::array<Poly, 3>> rel = {{g[1], -g[0], Poly()}, {g[2], Poly(), -g[0]}, {Poly(), g[2], -g[1]}};
  int n = static_cast<int>(dim_forms(k));
  EchelonSpace sp(3 * n);
  for (auto& r : rel)
    for (auto& m : monomial_basis(k - d + 1)) {
      Vec v(static_cast<std::size_t>(3 * n));
      for (int w = 0; w < 3; ++w) {
        Poly p = Poly::term(m) * r[static_cast<std::size_t>(w)];
        if (p.is_zero()) continue;
        Vec c = p.coefficients(k);
        for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(w * n + i)] = c[static_cast<std::size_t>(i)];
      }
      sp.insert(v);
    }
  return sp.dim();
}

// Random form of degree d with small integer coefficients and a given
// number of terms (0 means dense).
inline Poly random_form(std::mt19937_64& rng, int d, int range = 3, int terms = 0) {
  auto basis = monomial_basis(d);
  std::uniform_int_distribution<int> coef(-range, range);
  Poly p;
  if (terms <= 0) {
    for (auto& m : basis) p.add_term(m, Scalar(coef(rng)));
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    for (int i = 0; i < terms; ++i) {
      int c = coef(rng);
      if (c == 0) c = 1;
      p.add_term(basis[pick(rng)], Scalar(c));
    }
  }
  return p;
}

}  // namespace oracle

#endif
