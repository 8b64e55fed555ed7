#include "jumploci/polyalg.hpp"

#include <algorithm>
#include <cstdint>
#include <random>

#include <gmpxx.h>

#include "jumploci/errors.hpp"
#include "jumploci/univariate.hpp"

namespace jumploci {

namespace {

// polynomial in x with coefficients in K[y]
using Bi = std::vector<UPoly>;

void trim(Bi& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Bi to_bi(const Poly& p) {
  Bi out;
  for (auto& [m, c] : p.terms()) {
    std::size_t i = static_cast<std::size_t>(m.e[0]);
    if (out.size() <= i) out.resize(i + 1);
    out[i] = out[i] + UPoly::monomial(m.e[1], c);
  }
  trim(out);
  return out;
}

Poly from_bi(const Bi& a) {
  Poly p;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto& c = a[i].coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) p.add_term(Monomial(static_cast<int>(i), static_cast<int>(j), 0), c[j]);
  }
  return p;
}

UPoly content(const Bi& a) {
  UPoly g;
  for (auto& c : a) {
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

Bi divide_content(const Bi& a, const UPoly& c) {
  Bi out;
  for (auto& x : a) out.push_back(exact_quotient(x, c));
  return out;
}

// Removes the scalar content as well: over Q the result has coprime integer
// coefficients, otherwise the leading scalar is made 1.  Without this the
// pseudo-remainder sequence grows exponentially in coefficient size.
Bi scalar_normalize(Bi a) {
  if (a.empty()) return a;
  bool rational = true;
  for (auto& c : a)
    for (auto& s : c.coeffs()) rational = rational && s.is_rational();
  Scalar factor;
  if (rational) {
    mpz_class num(0), den(1);
    for (auto& c : a)
      for (auto& s : c.coeffs()) {
        if (s.is_zero()) continue;
        const mpq_class& q = s.rational();
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
      }
    factor = Scalar(mpq_class(den, num));
  } else {
    factor = a.back().coeffs().back().inverse();
  }
  for (auto& c : a) c = c * factor;
  return a;
}

Bi primitive(const Bi& a) {
  if (a.empty()) return a;
  return scalar_normalize(divide_content(a, content(a)));
}

Bi prem(Bi r, const Bi& b) {
  const int n = static_cast<int>(b.size()) - 1;
  const UPoly& lc = b.back();
  while (static_cast<int>(r.size()) - 1 >= n && !r.empty()) {
    UPoly c = r.back();
    int shift = static_cast<int>(r.size()) - 1 - n;
    for (auto& x : r) x = x * lc;
    for (int j = 0; j <= n; ++j) r[static_cast<std::size_t>(shift + j)] = r[static_cast<std::size_t>(shift + j)] - c * b[static_cast<std::size_t>(j)];
    trim(r);
  }
  return r;
}

Bi gcd_bi(Bi a, Bi b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  UPoly ca = content(a), cb = content(b);
  UPoly c = gcd(ca, cb);
  a = scalar_normalize(divide_content(a, ca));
  b = scalar_normalize(divide_content(b, cb));
  if (a.size() < b.size()) std::swap(a, b);
  // y = y0 keeping both leading coefficients, with coprime images, bounds
  // the x-degree of the gcd by 0; the common part is then the content gcd
  if (b.size() > 1) {
    for (int y0 : {3, -5, 7, 11, -13, 17}) {
      const Scalar v(y0);
      if (a.back().evaluate(v).is_zero() || b.back().evaluate(v).is_zero()) continue;
      auto image = [&v](const Bi& p) {
        std::vector<Scalar> c;
        for (auto& u : p) c.push_back(u.evaluate(v));
        return UPoly(std::move(c));
      };
      if (gcd(image(a), image(b)).degree() == 0) return Bi{c};
      break;
    }
  }
  while (!b.empty()) {
    Bi r = prem(a, b);
    a = std::move(b);
    b = primitive(r);
  }
  a = primitive(a);
  for (auto& x : a) x = x * c;
  return a;
}

int z_valuation(const Poly& p) {
  int v = 1 << 30;
  for (auto& [m, c] : p.terms()) v = std::min(v, m.e[2]);
  return v;
}

Poly strip_z(const Poly& p, int v) {
  Poly out;
  for (auto& [m, c] : p.terms()) out.add_term(Monomial(m.e[0], m.e[1], m.e[2] - v), c);
  return out;
}

}  // namespace

Poly dehomogenize(const Poly& p) {
  Poly out;
  for (auto& [m, c] : p.terms()) out.add_term(Monomial(m.e[0], m.e[1], 0), c);
  return out;
}

Poly homogenize(const Poly& p, int deg) {
  Poly out;
  for (auto& [m, c] : p.terms()) out.add_term(Monomial(m.e[0], m.e[1], deg - m.e[0] - m.e[1]), c);
  return out;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  if (!a.is_homogeneous() || !b.is_homogeneous()) throw MathError(ErrorCode::NonHomogeneous, "gcd expects forms");
  int va = z_valuation(a), vb = z_valuation(b);
  Bi g = gcd_bi(to_bi(dehomogenize(strip_z(a, va))), to_bi(dehomogenize(strip_z(b, vb))));
  Poly gp = from_bi(g);
  Poly h = homogenize(gp, gp.degree());
  return (h * Poly::term(Monomial(0, 0, std::min(va, vb)))).normalized();
}

Poly gcd(const std::vector<Poly>& forms) {
  Poly g;
  for (auto& f : forms) {
    g = gcd(g, f);
    if (g.degree() == 0) break;
  }
  return g;
}

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return p.normalized();
  Poly g = gcd({p, p.derivative(0), p.derivative(1), p.derivative(2)});
  return exact_divide(p, g).normalized();
}

Poly determinant(std::vector<std::vector<Poly>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Poly(Scalar(1));
  for (auto& row : a)
    if (row.size() != n) throw MathError(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Poly prev(Scalar(1));
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (piv == n || a[i][k].size() < a[piv][k].size()) piv = i;
    }
    if (piv == n) return Poly();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Poly t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        if (!t.is_zero()) {
          Poly q;
          if (!try_exact_divide(t, prev, q)) throw MathError(ErrorCode::InternalInconsistency, "fraction-free step not exact");
          t = std::move(q);
        }
        a[i][j] = std::move(t);
      }
      a[i][k] = Poly();
    }
    prev = a[k][k];
  }
  Poly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

Poly resultant(const Poly& p, const Poly& q, int var) {
  auto split = [var](const Poly& f) {
    std::vector<Poly> c;
    for (auto& [m, s] : f.terms()) {
      std::size_t e = static_cast<std::size_t>(m.e[static_cast<std::size_t>(var)]);
      if (c.size() <= e) c.resize(e + 1);
      Monomial r = m;
      r.e[static_cast<std::size_t>(var)] = 0;
      c[e].add_term(r, s);
    }
    return c;
  };
  std::vector<Poly> pc = split(p), qc = split(q);
  if (pc.empty() || qc.empty()) return Poly();
  const int m = static_cast<int>(pc.size()) - 1, n = static_cast<int>(qc.size()) - 1;
  if (m == 0) return pc[0].pow(n);
  if (n == 0) return qc[0].pow(m);
  const int N = m + n;
  std::vector<std::vector<Poly>> S(static_cast<std::size_t>(N), std::vector<Poly>(static_cast<std::size_t>(N)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = pc[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = qc[static_cast<std::size_t>(n - j)];
  return determinant(std::move(S));
}

Scalar determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw MathError(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
  Matrix a = m;
  const int n = a.rows();
  Scalar det(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a.at(i, k).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return Scalar();
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      det = -det;
    }
    det *= a.at(k, k);
    Scalar inv = a.at(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      Scalar f = a.at(i, k) * inv;
      for (int j = k; j < n; ++j)
        if (!a.at(k, j).is_zero()) a.at(i, j) -= f * a.at(k, j);
    }
  }
  return det;
}

UPoly characteristic_polynomial(const Matrix& m) {
  const int n = m.rows();
  if (m.cols() != n) throw MathError(ErrorCode::IncompatibleDegrees, "characteristic polynomial of a non-square matrix");
  Matrix h = m;
  // similarity transforms down to upper Hessenberg form
  for (int col = 0; col + 2 < n; ++col) {
    int piv = -1;
    for (int i = col + 1; i < n && piv < 0; ++i)
      if (!h.at(i, col).is_zero()) piv = i;
    if (piv < 0) continue;
    if (piv != col + 1) {
      for (int j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(col + 1, j));
      for (int i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, col + 1));
    }
    const Scalar inv = Scalar(1) / h.at(col + 1, col);
    for (int i = col + 2; i < n; ++i) {
      if (h.at(i, col).is_zero()) continue;
      const Scalar f = h.at(i, col) * inv;
      for (int j = 0; j < n; ++j) h.at(i, j) -= f * h.at(col + 1, j);
      for (int j = 0; j < n; ++j) h.at(j, col + 1) += f * h.at(j, i);
    }
  }
  // p_k = (t - h_kk) p_{k-1} - sum_i h_ik * prod_{i<l<=k} h_{l,l-1} * p_{i-1}
  std::vector<UPoly> p(static_cast<std::size_t>(n) + 1);
  p[0] = UPoly({Scalar(1)});
  const UPoly t = UPoly::monomial(1);
  for (int k = 1; k <= n; ++k) {
    UPoly acc = (t - UPoly({h.at(k - 1, k - 1)})) * p[static_cast<std::size_t>(k) - 1];
    Scalar prod(1);
    for (int i = k - 1; i >= 1; --i) {
      prod *= h.at(i, i - 1);
      if (prod.is_zero()) break;
      acc = acc - p[static_cast<std::size_t>(i) - 1] * (prod * h.at(i - 1, k - 1));
    }
    p[static_cast<std::size_t>(k)] = acc;
  }
  return p[static_cast<std::size_t>(n)];
}

namespace {

using u64 = std::uint64_t;
using ModMat = std::vector<std::vector<u64>>;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }
u64 addmod(u64 a, u64 b, u64 p) { return a + b >= p ? a + b - p : a + b; }
u64 submod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
u64 invmod(u64 a, u64 p) {
  u64 r = 1, e = p - 2;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(const mpz_class& v, const mpz_class& pz) {
  mpz_class r = v % pz;
  if (r < 0) r += pz;
  return r.get_ui();
}

// X = B^{-1} C mod p in place of C; false when B is singular mod p.
bool solve_mod(ModMat B, ModMat& C, u64 p) {
  const std::size_t n = B.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && B[piv][c] == 0) ++piv;
    if (piv == n) return false;
    std::swap(B[piv], B[c]);
    std::swap(C[piv], C[c]);
    const u64 inv = invmod(B[c][c], p);
    for (auto& v : B[c]) v = mulmod(v, inv, p);
    for (auto& v : C[c]) v = mulmod(v, inv, p);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || B[i][c] == 0) continue;
      const u64 f = B[i][c];
      for (std::size_t j = c; j < n; ++j) B[i][j] = submod(B[i][j], mulmod(f, B[c][j], p), p);
      for (std::size_t j = 0; j < n; ++j) C[i][j] = submod(C[i][j], mulmod(f, C[c][j], p), p);
    }
  }
  return true;
}

// det(t I - h) mod p, coefficients from the constant term up.
std::vector<u64> charpoly_mod(ModMat h, u64 p) {
  const std::size_t n = h.size();
  for (std::size_t col = 0; col + 2 < n; ++col) {
    std::size_t piv = col + 1;
    while (piv < n && h[piv][col] == 0) ++piv;
    if (piv == n) continue;
    if (piv != col + 1) {
      std::swap(h[piv], h[col + 1]);
      for (auto& row : h) std::swap(row[piv], row[col + 1]);
    }
    const u64 inv = invmod(h[col + 1][col], p);
    for (std::size_t i = col + 2; i < n; ++i) {
      if (h[i][col] == 0) continue;
      const u64 f = mulmod(h[i][col], inv, p);
      for (std::size_t j = 0; j < n; ++j) h[i][j] = submod(h[i][j], mulmod(f, h[col + 1][j], p), p);
      for (std::size_t j = 0; j < n; ++j) h[j][col + 1] = addmod(h[j][col + 1], mulmod(f, h[j][i], p), p);
    }
  }
  std::vector<std::vector<u64>> P(n + 1);
  P[0] = {1};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<u64> acc(k + 1, 0);
    const auto& prev = P[k - 1];
    for (std::size_t i = 0; i < prev.size(); ++i) {
      acc[i + 1] = addmod(acc[i + 1], prev[i], p);
      acc[i] = submod(acc[i], mulmod(h[k - 1][k - 1], prev[i], p), p);
    }
    u64 prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod = mulmod(prod, h[i][i - 1], p);
      if (prod == 0) break;
      const u64 f = mulmod(prod, h[i - 1][k - 1], p);
      for (std::size_t j = 0; j < P[i - 1].size(); ++j) acc[j] = submod(acc[j], mulmod(f, P[i - 1][j], p), p);
    }
    P[k] = std::move(acc);
  }
  return P[n];
}

}  // namespace

std::optional<UPoly> pencil_charpoly(const Matrix& B, const Matrix& C) {
  const int n = B.rows();
  if (B.cols() != n || C.rows() != n || C.cols() != n) throw MathError(ErrorCode::IncompatibleDegrees, "pencil of non-square or unequal matrices");
  if (n == 0) return UPoly({Scalar(1)});
  if (!B.is_rational() || !C.is_rational()) {
    auto op = solve_square(B, C);
    if (!op) return std::nullopt;
    return characteristic_polynomial(*op);
  }
  // integer rows, one scale per row of the pencil
  std::vector<std::vector<mpz_class>> Bi(static_cast<std::size_t>(n)), Ci(static_cast<std::size_t>(n));
  double logBound = 0;
  for (int i = 0; i < n; ++i) {
    mpz_class L(1);
    for (int j = 0; j < n; ++j) {
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), B.at(i, j).rational().get_den_mpz_t());
      mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), C.at(i, j).rational().get_den_mpz_t());
    }
    mpz_class norm2(0);
    for (int j = 0; j < n; ++j) {
      mpz_class b = B.at(i, j).rational().get_num() * (L / B.at(i, j).rational().get_den());
      mpz_class c = C.at(i, j).rational().get_num() * (L / C.at(i, j).rational().get_den());
      norm2 += b * b + c * c;
      Bi[static_cast<std::size_t>(i)].push_back(std::move(b));
      Ci[static_cast<std::size_t>(i)].push_back(std::move(c));
    }
    // |B_i| + |C_i| <= sqrt(2 (|B_i|^2 + |C_i|^2))
    if (norm2 > 0) logBound += 0.5 * (1.0 + static_cast<double>(mpz_sizeinbase(norm2.get_mpz_t(), 2)));
  }

  std::vector<mpz_class> acc(static_cast<std::size_t>(n) + 1);
  mpz_class modulus(1);
  double logModulus = 0;
  mpz_class cand(static_cast<unsigned long>((1ULL << 62) - 57));
  int singular = 0;
  while (logModulus < logBound + 2) {
    mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t());
    const u64 p = cand.get_ui();
    ModMat Bp(static_cast<std::size_t>(n), std::vector<u64>(static_cast<std::size_t>(n))), Cp = Bp;
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i)
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        Bp[i][j] = reduce(Bi[i][j], cand);
        Cp[i][j] = reduce(Ci[i][j], cand);
      }
    // det(tB - C) = det(B) * charpoly(B^{-1} C); det(B) mod p from the
    // same elimination
    u64 detB = 1;
    {
      ModMat T = Bp;
      for (std::size_t c = 0; c < T.size() && detB; ++c) {
        std::size_t piv = c;
        while (piv < T.size() && T[piv][c] == 0) ++piv;
        if (piv == T.size()) {
          detB = 0;
          break;
        }
        if (piv != c) {
          std::swap(T[piv], T[c]);
          detB = p - detB;
        }
        detB = mulmod(detB, T[c][c], p);
        const u64 inv = invmod(T[c][c], p);
        for (std::size_t i = c + 1; i < T.size(); ++i) {
          if (T[i][c] == 0) continue;
          const u64 f = mulmod(T[i][c], inv, p);
          for (std::size_t j = c; j < T.size(); ++j) T[i][j] = submod(T[i][j], mulmod(f, T[c][j], p), p);
        }
      }
    }
    if (detB == 0 || !solve_mod(Bp, Cp, p)) {
      // B singular over Q makes every prime singular; settle it exactly
      if (++singular == 3) {
        if (determinant(B).is_zero()) return std::nullopt;
      }
      continue;
    }
    std::vector<u64> chi = charpoly_mod(std::move(Cp), p);
    // CRT, coefficient by coefficient
    const mpz_class pm(static_cast<unsigned long>(p));
    mpz_class inv;
    mpz_class mm = modulus % pm;
    mpz_invert(inv.get_mpz_t(), mm.get_mpz_t(), pm.get_mpz_t());
    for (std::size_t k = 0; k <= static_cast<std::size_t>(n); ++k) {
      const u64 r = mulmod(chi[k], detB, p);
      mpz_class diff = (mpz_class(static_cast<unsigned long>(r)) - acc[k] % pm) * inv % pm;
      if (diff < 0) diff += pm;
      acc[k] += modulus * diff;
    }
    modulus *= pm;
    logModulus += 61.99;
  }
  mpz_class half = modulus / 2;
  std::vector<Scalar> coeffs;
  for (auto& a : acc) {
    if (a > half) a -= modulus;
    coeffs.emplace_back(mpq_class(a));
  }
  if (coeffs.back().is_zero()) return std::nullopt;
  const Scalar lead = coeffs.back();
  for (auto& c : coeffs) c = c / lead;
  return UPoly(std::move(coeffs));
}

}  // namespace jumploci
