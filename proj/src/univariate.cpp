#include "jumploci/univariate.hpp"

#include <algorithm>
#include <cstdint>

#include "jumploci/errors.hpp"

namespace jumploci {

UPoly::UPoly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int degree, const Scalar& c) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar UPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Scalar();
  return c_[static_cast<std::size_t>(i)];
}

const NumberField* UPoly::field() const {
  const NumberField* f = nullptr;
  for (auto& c : c_) f = common_field(f, c.field());
  return f;
}

UPoly UPoly::operator-() const {
  UPoly r(*this);
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Scalar> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return UPoly(std::move(v));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Scalar> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly operator*(const UPoly& a, const Scalar& s) {
  std::vector<Scalar> v = a.c_;
  for (auto& c : v) c *= s;
  return UPoly(std::move(v));
}

Scalar UPoly::evaluate(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Scalar> v(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Scalar(static_cast<long>(i));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

std::string UPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool neg = !cs.empty() && cs[0] == '-' && c.is_rational();
    if (neg) cs = cs.substr(1);
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    if (i == 0) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder) {
  if (b.is_zero()) throw MathError(ErrorCode::DivisionByZero, "polynomial division by zero");
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  std::vector<Scalar> q(r.size() >= b.coeffs().size() ? r.size() - b.coeffs().size() + 1 : 0);
  Scalar inv = b.leading().inverse();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[static_cast<std::size_t>(i)].is_zero()) continue;
    Scalar c = r[static_cast<std::size_t>(i)] * inv;
    q[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
  }
  quotient = UPoly(std::move(q));
  remainder = UPoly(std::move(r));
}

UPoly exact_quotient(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.is_zero()) throw MathError(ErrorCode::NotDivisible, "univariate division leaves a remainder");
  return q;
}

namespace {

// Degree of gcd(a, b) mod p, or -1 when p divides a denominator or a
// leading coefficient.  Reduction can only raise the gcd degree.
int gcd_degree_mod(const UPoly& a, const UPoly& b, std::uint64_t p) {
  auto mul = [p](std::uint64_t x, std::uint64_t y) { return static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * y) % p); };
  auto inv = [&](std::uint64_t x) {
    std::uint64_t r = 1, e = p - 2;
    for (; e; e >>= 1, x = mul(x, x))
      if (e & 1) r = mul(r, x);
    return r;
  };
  auto reduce = [&](const UPoly& u, std::vector<std::uint64_t>& out) {
    out.clear();
    for (auto& c : u.coeffs()) {
      const std::uint64_t num = mpz_fdiv_ui(c.rational().get_num_mpz_t(), p);
      const std::uint64_t den = mpz_fdiv_ui(c.rational().get_den_mpz_t(), p);
      if (den == 0) return false;
      out.push_back(mul(num, inv(den)));
    }
    return out.back() != 0;
  };
  std::vector<std::uint64_t> r0, r1;
  if (!reduce(a, r0) || !reduce(b, r1)) return -1;
  if (r0.size() < r1.size()) std::swap(r0, r1);
  while (!r1.empty()) {
    const std::uint64_t li = inv(r1.back());
    while (r0.size() >= r1.size()) {
      const std::uint64_t q = mul(r0.back(), li);
      const std::size_t shift = r0.size() - r1.size();
      for (std::size_t i = 0; i < r1.size(); ++i) r0[shift + i] = (r0[shift + i] + p - mul(q, r1[i])) % p;
      while (!r0.empty() && r0.back() == 0) r0.pop_back();
    }
    std::swap(r0, r1);
  }
  return static_cast<int>(r0.size()) - 1;
}

bool certainly_coprime(const UPoly& a, const UPoly& b) {
  if (a.degree() <= 0 || b.degree() <= 0) return false;
  for (auto* u : {&a, &b})
    for (auto& c : u->coeffs())
      if (!c.is_rational()) return false;
  for (std::uint64_t p : {4611686018427387847ULL, 4611686018427387817ULL, 4611686018427387787ULL})
    if (gcd_degree_mod(a, b, p) == 0) return true;
  return false;
}

}  // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
  if (certainly_coprime(a, b)) return UPoly({Scalar(1)});
  UPoly r0 = a, r1 = b;
  while (!r1.is_zero()) {
    UPoly q, r;
    divmod(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = r.monic();
  }
  return r0.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p;
  return exact_quotient(p, gcd(p, p.derivative())).monic();
}

int root_multiplicity(const UPoly& p, const Scalar& x0) {
  int m = 0;
  UPoly cur = p;
  UPoly lin({-x0, Scalar(1)});
  while (!cur.is_zero() && cur.evaluate(x0).is_zero()) {
    cur = exact_quotient(cur, lin);
    ++m;
  }
  return m;
}

std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = a % m;
  if (r1 < 0) r1 += m;
  mpz_class s0 = 0, s1 = 1;
  while (r1 > bound) {
    mpz_class q = r0 / r1;
    mpz_class r2 = r0 - q * r1;
    mpz_class s2 = s0 - q * s1;
    r0 = r1;
    r1 = r2;
    s0 = s1;
    s1 = s2;
  }
  if (s1 == 0 || abs(s1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), s1.get_mpz_t());
  if (g != 1) return std::nullopt;
  mpq_class out(r1, s1);
  out.canonicalize();
  return out;
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 eval_mod(const std::vector<u64>& c, u64 x, u64 p) {
  u64 acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (mulmod(acc, x, p) + *it) % p;
  return acc;
}

u64 to_mod(const mpz_class& z, u64 p) {
  mpz_class r = z % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

std::vector<u64> deriv_mod(const std::vector<u64>& c, u64 p) {
  std::vector<u64> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(mulmod(c[i], i % p, p));
  return d;
}

// simple roots of c mod p; nullopt if a multiple root shows up
std::optional<std::vector<u64>> simple_roots_mod(const std::vector<u64>& c, u64 p) {
  std::vector<u64> d = deriv_mod(c, p);
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    if (eval_mod(c, x, p) != 0) continue;
    if (eval_mod(d, x, p) == 0) return std::nullopt;
    out.push_back(x);
  }
  return out;
}

mpz_class eval_mpz(const std::vector<mpz_class>& c, const mpz_class& x, const mpz_class& m) {
  mpz_class acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = (acc * x + *it) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

std::vector<mpz_class> deriv_mpz(const std::vector<mpz_class>& c) {
  std::vector<mpz_class> d;
  for (std::size_t i = 1; i < c.size(); ++i) d.push_back(c[i] * static_cast<unsigned long>(i));
  return d;
}

mpz_class newton_lift(const std::vector<mpz_class>& c, mpz_class r, const mpz_class& m) {
  std::vector<mpz_class> d = deriv_mpz(c);
  for (int it = 0; it < 80; ++it) {
    mpz_class v = eval_mpz(c, r, m);
    if (v == 0) break;
    mpz_class dv = eval_mpz(d, r, m), inv;
    if (mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), m.get_mpz_t()) == 0) break;
    r = (r - v * inv) % m;
    if (r < 0) r += m;
  }
  return r;
}

mpz_class lcm_den(const std::vector<mpq_class>& v) {
  mpz_class l = 1;
  for (auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  return l;
}

// P squarefree with P(0) != 0 and degree >= 1; field has degree <= 2.
std::vector<Scalar> padic_roots(const UPoly& P, const NumberField* field) {
  const int n = field ? field->degree() : 1;
  const int deg = P.degree();
  std::vector<std::vector<mpq_class>> res(static_cast<std::size_t>(deg) + 1);
  std::vector<mpq_class> all;
  for (int j = 0; j <= deg; ++j) {
    res[static_cast<std::size_t>(j)] = P.coeffs()[static_cast<std::size_t>(j)].residue();
    res[static_cast<std::size_t>(j)].resize(static_cast<std::size_t>(n));
    for (auto& x : res[static_cast<std::size_t>(j)]) all.push_back(x);
  }
  mpz_class D = lcm_den(all);
  std::vector<std::vector<mpz_class>> C(res.size(), std::vector<mpz_class>(static_cast<std::size_t>(n)));
  mpz_class H = 1;
  for (std::size_t j = 0; j < res.size(); ++j)
    for (int i = 0; i < n; ++i) {
      mpq_class v = res[j][static_cast<std::size_t>(i)] * D;
      C[j][static_cast<std::size_t>(i)] = v.get_num();
      H = std::max(H, mpz_class(abs(v.get_num())));
    }
  std::vector<mpz_class> Mz;
  mpz_class Hm = 1;
  if (field) {
    mpz_class Dm = lcm_den(field->min_poly());
    for (auto& x : field->min_poly()) {
      mpq_class v = x * Dm;
      Mz.push_back(v.get_num());
      Hm = std::max(Hm, mpz_class(abs(v.get_num())));
    }
  }
  mpz_class bound = 2 * H * (deg + 1) * Hm;
  mpz_class b = 1;
  for (int i = 0; i < n; ++i) b *= bound;
  if (n > 1) b = b * b;
  mpz_class target = 2 * b * b + 1;

  auto embed_mod = [&](const std::vector<u64>& tpow, u64 p) {
    std::vector<u64> c(C.size());
    for (std::size_t j = 0; j < C.size(); ++j) {
      u64 acc = 0;
      for (int i = 0; i < n; ++i) acc = (acc + mulmod(to_mod(C[j][static_cast<std::size_t>(i)], p), tpow[static_cast<std::size_t>(i)], p)) % p;
      c[j] = acc;
    }
    return c;
  };

  mpz_class pz = 1009;
  for (int attempt = 0; attempt < 400; ++attempt, mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t())) {
    u64 p = pz.get_ui();
    std::vector<u64> taus;
    if (field) {
      std::vector<u64> mm;
      bool bad = false;
      for (auto& z : Mz) mm.push_back(to_mod(z, p));
      if (mm.back() == 0) bad = true;
      if (bad) continue;
      auto tr = simple_roots_mod(mm, p);
      if (!tr || static_cast<int>(tr->size()) != n) continue;
      taus = *tr;
    } else {
      taus = {0};
    }
    std::vector<std::vector<u64>> rootsModP;
    bool ok = true;
    for (u64 tau : taus) {
      std::vector<u64> tp(static_cast<std::size_t>(n));
      tp[0] = 1;
      for (int i = 1; i < n; ++i) tp[static_cast<std::size_t>(i)] = mulmod(tp[static_cast<std::size_t>(i - 1)], tau, p);
      auto c = embed_mod(tp, p);
      if (c.back() == 0) { ok = false; break; }
      auto r = simple_roots_mod(c, p);
      if (!r) { ok = false; break; }
      rootsModP.push_back(*r);
    }
    if (!ok) continue;

    mpz_class M = pz;
    while (M <= target) M *= pz;
    std::vector<mpz_class> tauLift;
    for (u64 tau : taus) tauLift.push_back(field ? newton_lift(Mz, mpz_class(static_cast<unsigned long>(tau)), M) : mpz_class(0));
    std::vector<std::vector<mpz_class>> lifted;
    for (std::size_t e = 0; e < taus.size(); ++e) {
      std::vector<mpz_class> c(C.size());
      for (std::size_t j = 0; j < C.size(); ++j) {
        mpz_class acc = 0, tp = 1;
        for (int i = 0; i < n; ++i) {
          acc += C[j][static_cast<std::size_t>(i)] * tp;
          tp = tp * tauLift[e] % M;
        }
        c[j] = acc % M;
        if (c[j] < 0) c[j] += M;
      }
      std::vector<mpz_class> l;
      for (u64 r : rootsModP[e]) l.push_back(newton_lift(c, mpz_class(static_cast<unsigned long>(r)), M));
      lifted.push_back(std::move(l));
    }

    std::vector<Scalar> out;
    auto consider = [&](const Scalar& cand) {
      if (!P.evaluate(cand).is_zero()) return;
      for (auto& o : out)
        if (o == cand) return;
      out.push_back(cand);
    };
    if (n == 1) {
      for (auto& th : lifted[0]) {
        auto q = rational_reconstruct(th, M);
        if (q) consider(Scalar(*q));
      }
    } else {
      mpz_class diff = (tauLift[0] - tauLift[1]) % M, inv;
      if (diff < 0) diff += M;
      mpz_invert(inv.get_mpz_t(), diff.get_mpz_t(), M.get_mpz_t());
      for (auto& t1 : lifted[0])
        for (auto& t2 : lifted[1]) {
          mpz_class v = (t1 - t2) * inv % M;
          if (v < 0) v += M;
          mpz_class u = (t1 - v * tauLift[0]) % M;
          if (u < 0) u += M;
          auto uq = rational_reconstruct(u, M);
          auto vq = rational_reconstruct(v, M);
          if (!uq || !vq) continue;
          consider(Scalar::from_residue(field, {*uq, *vq}));
        }
    }
    return out;
  }
  throw MathError(ErrorCode::ResultantDegenerate, "no suitable prime for root finding");
}

// gcd over Q of the residue-component polynomials; its roots are the
// rational roots of p
UPoly rational_part(const UPoly& p) {
  const NumberField* f = p.field();
  int n = f ? f->degree() : 1;
  UPoly g;
  for (int i = 0; i < n; ++i) {
    std::vector<Scalar> comp;
    for (auto& c : p.coeffs()) {
      auto r = c.residue();
      comp.emplace_back(static_cast<std::size_t>(i) < r.size() ? r[static_cast<std::size_t>(i)] : mpq_class(0));
    }
    g = gcd(g, UPoly(comp));
  }
  return g;
}

}  // namespace

std::vector<Scalar> roots_in_field(const UPoly& p, const NumberField* field) {
  if (p.is_zero()) throw MathError(ErrorCode::InvalidArgument, "roots of the zero polynomial");
  const NumberField* pf = p.field();
  UPoly work = p;
  const NumberField* target = field;
  if (pf && pf != field) {
    if (field) throw MathError(ErrorCode::FieldMismatch, "polynomial and root field differ");
  }
  if (!target || target->degree() > 2) {
    work = rational_part(p);
    target = nullptr;
  }
  std::vector<Scalar> out;
  if (work.degree() <= 0) return out;
  if (work.coeff(0).is_zero()) {
    out.emplace_back(0);
    while (!work.is_zero() && work.coeff(0).is_zero()) {
      std::vector<Scalar> c(work.coeffs().begin() + 1, work.coeffs().end());
      work = UPoly(std::move(c));
    }
  }
  work = squarefree_part(work);
  if (work.degree() >= 1) {
    auto more = padic_roots(work, target);
    out.insert(out.end(), more.begin(), more.end());
  }
  return out;
}

std::vector<mpq_class> rational_roots(const UPoly& p) {
  std::vector<mpq_class> out;
  for (auto& s : roots_in_field(p, nullptr)) out.push_back(s.rational());
  return out;
}

}  // namespace jumploci
