#include "jumploci/poly.hpp"

#include <algorithm>

#include "jumploci/errors.hpp"
#include "jumploci/univariate.hpp"

namespace jumploci {

std::vector<Monomial> monomial_basis(int k) {
  std::vector<Monomial> out;
  if (k < 0) return out;
  out.reserve(static_cast<std::size_t>(dim_forms(k)));
  for (int s = 0; s <= k; ++s)
    for (int c = 0; c <= s; ++c) out.emplace_back(k - s, s - c, c);
  return out;
}

Monomial monomial_at(int k, int index) {
  int s = 0;
  while ((s + 1) * (s + 2) / 2 <= index) ++s;
  int c = index - s * (s + 1) / 2;
  return {k - s, s - c, c};
}

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) terms_.emplace(Monomial(), c);
}

Poly Poly::var(int i) {
  Monomial m;
  m.e[static_cast<std::size_t>(i)] = 1;
  return term(m);
}

Poly Poly::term(const Monomial& m, const Scalar& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

Scalar Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

const NumberField* Poly::field() const {
  const NumberField* f = nullptr;
  for (auto& [m, c] : terms_) f = common_field(f, c.field());
  return f;
}

void Poly::add_term(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(*this);
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::pow(int n) const {
  Poly result(Scalar(1)), base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n) base = base * base;
  }
  return result;
}

Poly Poly::derivative(int var) const {
  Poly r;
  for (auto& [m, c] : terms_) {
    int e = m.e[static_cast<std::size_t>(var)];
    if (e == 0) continue;
    Monomial n = m;
    n.e[static_cast<std::size_t>(var)] -= 1;
    r.add_term(n, c * Scalar(e));
  }
  return r;
}

Scalar Poly::evaluate(const std::array<Scalar, 3>& point) const {
  Scalar acc;
  for (auto& [m, c] : terms_) {
    Scalar t = c;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < m.e[static_cast<std::size_t>(i)]; ++k) t *= point[static_cast<std::size_t>(i)];
    acc += t;
  }
  return acc;
}

Poly Poly::compose(const std::array<Poly, 3>& images) const {
  std::array<std::vector<Poly>, 3> powers;
  for (int i = 0; i < 3; ++i) powers[static_cast<std::size_t>(i)].push_back(Poly(Scalar(1)));
  auto power = [&](int i, int e) -> const Poly& {
    auto& v = powers[static_cast<std::size_t>(i)];
    while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[static_cast<std::size_t>(i)]);
    return v[static_cast<std::size_t>(e)];
  };
  Poly r;
  for (auto& [m, c] : terms_) r += power(0, m.e[0]) * power(1, m.e[1]) * power(2, m.e[2]) * c;
  return r;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * leading_coeff().inverse();
}

Poly Poly::normalized() const {
  if (is_zero()) return *this;
  for (auto& [m, c] : terms_)
    if (!c.is_rational()) return monic();
  mpz_class l = 1, g = 0;
  for (auto& [m, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  for (auto& [m, c] : terms_) {
    mpq_class v = c.rational() * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  mpq_class scale(l, g);
  if (sgn(leading_coeff().rational()) < 0) scale = -scale;
  scale.canonicalize();
  return *this * Scalar(scale);
}

std::vector<Scalar> Poly::coefficients(int k) const {
  std::vector<Scalar> v(static_cast<std::size_t>(dim_forms(k)));
  for (auto& [m, c] : terms_) {
    if (m.degree() != k) throw MathError(ErrorCode::IncompatibleDegrees, "coefficient vector of a form of another degree");
    v[static_cast<std::size_t>(monomial_index(m))] = c;
  }
  return v;
}

Poly Poly::from_coefficients(int k, const std::vector<Scalar>& c) {
  Poly p;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) p.terms_.emplace(monomial_at(k, static_cast<int>(i)), c[i]);
  return p;
}

std::string Poly::to_string(const std::array<const char*, 3>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto& [m, c] : terms_) {
    std::string cs = c.to_string();
    bool neg = c.is_rational() && sgn(c.rational()) < 0;
    if (neg) cs = cs.substr(1);
    if (!c.is_rational()) cs = "(" + cs + ")";
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    std::string mono;
    for (int i = 0; i < 3; ++i) {
      int e = m.e[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[static_cast<std::size_t>(i)];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += cs;
    } else {
      if (cs != "1") out += cs + "*";
      out += mono;
    }
  }
  return out;
}

Partials partials(const Poly& f) {
  if (!f.is_homogeneous()) throw MathError(ErrorCode::NonHomogeneous, "partials of a non-homogeneous polynomial");
  return {f.derivative(0), f.derivative(1), f.derivative(2)};
}

bool try_exact_divide(const Poly& p, const Poly& f, Poly& quotient) {
  if (f.is_zero()) throw MathError(ErrorCode::DivisionByZero, "division by the zero polynomial");
  Poly rem = p;
  quotient = Poly();
  const Monomial& lm = f.leading_monomial();
  Scalar inv = f.leading_coeff().inverse();
  while (!rem.is_zero()) {
    const Monomial& m = rem.leading_monomial();
    if (!lm.divides(m)) return false;
    Poly t = Poly::term(m / lm, rem.leading_coeff() * inv);
    quotient += t;
    rem -= t * f;
  }
  return true;
}

Poly exact_divide(const Poly& p, const Poly& f) {
  Poly q;
  if (!try_exact_divide(p, f, q)) throw MathError(ErrorCode::NotDivisible, "no exact quotient");
  return q;
}

Poly det3(const std::array<std::array<Poly, 3>, 3>& r) {
  for (int i = 0; i < 3; ++i) {
    int rowDeg = -2;
    for (int j = 0; j < 3; ++j) {
      const Poly& e = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!e.is_homogeneous()) throw MathError(ErrorCode::IncompatibleDegrees, "det3 entry not homogeneous");
      if (e.is_zero()) continue;
      if (rowDeg == -2) rowDeg = e.degree();
      else if (rowDeg != e.degree()) throw MathError(ErrorCode::IncompatibleDegrees, "det3 row degrees differ");
    }
  }
  return r[0][0] * (r[1][1] * r[2][2] - r[1][2] * r[2][1]) - r[0][1] * (r[1][0] * r[2][2] - r[1][2] * r[2][0]) +
         r[0][2] * (r[1][0] * r[2][1] - r[1][1] * r[2][0]);
}

bool BinaryForm::is_zero() const {
  for (auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r;
  r.degree = a.degree + b.degree;
  r.coeffs.assign(static_cast<std::size_t>(r.degree) + 1, Scalar());
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.degree == b.degree && a.coeffs == b.coeffs; }

BinaryForm substitute_line(const Poly& p, const Point& P, const Point& Q) {
  if (projectively_equal(P, Q)) throw MathError(ErrorCode::CoincidentPoints, "line through coincident points");
  std::array<Poly, 3> img;
  for (int i = 0; i < 3; ++i)
    img[static_cast<std::size_t>(i)] =
        Poly::term(Monomial(1, 0, 0), P[static_cast<std::size_t>(i)]) + Poly::term(Monomial(0, 1, 0), Q[static_cast<std::size_t>(i)]);
  Poly r = p.compose(img);
  BinaryForm b;
  b.degree = std::max(p.degree(), 0);
  b.coeffs.assign(static_cast<std::size_t>(b.degree) + 1, Scalar());
  for (auto& [m, c] : r.terms()) b.coeffs[static_cast<std::size_t>(m.e[1])] = c;
  return b;
}

int binary_gcd_degree(const std::vector<BinaryForm>& forms) {
  UPoly g;
  int minShift = -1;
  bool any = false;
  for (auto& f : forms) {
    if (f.is_zero()) continue;
    any = true;
    UPoly u(f.coeffs);
    int shift = f.degree - u.degree();
    minShift = minShift < 0 ? shift : std::min(minShift, shift);
    g = gcd(g, u);
  }
  if (!any) throw MathError(ErrorCode::AllRestrictionsZero, "every restriction vanishes");
  return g.degree() + minShift;
}

bool projectively_equal(const Point& a, const Point& b) {
  bool az = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
  bool bz = b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
  if (az || bz) return az && bz;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)] != a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(i)])
        return false;
  return true;
}

Point canonical_point(const Point& p) {
  int first = -1;
  bool rational = true;
  for (int i = 0; i < 3; ++i) {
    if (first < 0 && !p[static_cast<std::size_t>(i)].is_zero()) first = i;
    if (!p[static_cast<std::size_t>(i)].is_rational()) rational = false;
  }
  if (first < 0) throw MathError(ErrorCode::InvalidArgument, "zero point");
  Point out = p;
  if (!rational) {
    Scalar inv = p[static_cast<std::size_t>(first)].inverse();
    for (auto& c : out) c *= inv;
    return out;
  }
  mpz_class l = 1, g = 0;
  for (auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.rational().get_den_mpz_t());
  for (auto& c : p) {
    mpq_class v = c.rational() * l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_num_mpz_t());
  }
  mpq_class scale(l, g);
  scale.canonicalize();
  if (sgn(p[static_cast<std::size_t>(first)].rational()) < 0) scale = -scale;
  for (auto& c : out) c = Scalar(mpq_class(c.rational() * scale));
  return out;
}

std::string point_to_string(const Point& p) {
  Point c = canonical_point(p);
  return "(" + c[0].to_string() + ":" + c[1].to_string() + ":" + c[2].to_string() + ")";
}

}  // namespace jumploci
