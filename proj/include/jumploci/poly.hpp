#ifndef JUMPLOCI_POLY_HPP
#define JUMPLOCI_POLY_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

struct Monomial {
  std::array<int, 3> e{0, 0, 0};

  Monomial() = default;
  Monomial(int a, int b, int c) : e{a, b, c} {}
  int degree() const { return e[0] + e[1] + e[2]; }
  Monomial operator*(const Monomial& o) const { return {e[0] + o.e[0], e[1] + o.e[1], e[2] + o.e[2]}; }
  bool divides(const Monomial& o) const { return e[0] <= o.e[0] && e[1] <= o.e[1] && e[2] <= o.e[2]; }
  Monomial operator/(const Monomial& o) const { return {e[0] - o.e[0], e[1] - o.e[1], e[2] - o.e[2]}; }
  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

// graded-lex with x > y > z; true when a comes first (is larger)
inline bool grlex_greater(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  return a.e > b.e;
}

struct GrlexDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_greater(a, b); }
};

inline long dim_forms(int k) { return k < 0 ? 0 : static_cast<long>(k + 1) * (k + 2) / 2; }

// position of m inside monomial_basis(m.degree())
inline int monomial_index(const Monomial& m) {
  int s = m.e[1] + m.e[2];
  return s * (s + 1) / 2 + m.e[2];
}

std::vector<Monomial> monomial_basis(int k);
Monomial monomial_at(int k, int index);

class Poly {
 public:
  using Terms = std::map<Monomial, Scalar, GrlexDescending>;

  Poly() = default;
  Poly(const Scalar& c);  // NOLINT
  static Poly var(int i);
  static Poly term(const Monomial& m, const Scalar& c = Scalar(1));

  bool is_zero() const { return terms_.empty(); }
  // -1 for the zero polynomial
  int degree() const;
  bool is_homogeneous() const;
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  Scalar coeff(const Monomial& m) const;
  const Monomial& leading_monomial() const { return terms_.begin()->first; }
  const Scalar& leading_coeff() const { return terms_.begin()->second; }
  const NumberField* field() const;

  void add_term(const Monomial& m, const Scalar& c);
  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  friend Poly operator*(const Scalar& s, Poly a) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int n) const;
  Poly derivative(int var) const;
  Scalar evaluate(const std::array<Scalar, 3>& point) const;
  // Substitute a polynomial for each variable.
  Poly compose(const std::array<Poly, 3>& images) const;
  // Scale so that the leading coefficient is 1.
  Poly monic() const;
  // Over Q: integer coefficients with gcd 1 and positive leading coefficient.
  // Over a number field: monic.
  Poly normalized() const;

  // Coefficient vector over monomial_basis(k).
  std::vector<Scalar> coefficients(int k) const;
  static Poly from_coefficients(int k, const std::vector<Scalar>& c);

  std::string to_string(const std::array<const char*, 3>& names = {"x", "y", "z"}) const;

 private:
  Terms terms_;
};

struct Partials {
  Poly fx, fy, fz;
  const Poly& operator[](int i) const { return i == 0 ? fx : (i == 1 ? fy : fz); }
};

Partials partials(const Poly& f);
Poly exact_divide(const Poly& p, const Poly& f);
// Quotient and whether the division was exact.
bool try_exact_divide(const Poly& p, const Poly& f, Poly& quotient);
Poly det3(const std::array<std::array<Poly, 3>, 3>& rows);

// Binary form in (s,t), coefficient of s^(deg-i) t^i at position i.
struct BinaryForm {
  int degree = 0;
  std::vector<Scalar> coeffs;
  bool is_zero() const;
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
};

using Point = std::array<Scalar, 3>;

BinaryForm substitute_line(const Poly& p, const Point& P, const Point& Q);
// Degree of the gcd of nonzero binary forms.
int binary_gcd_degree(const std::vector<BinaryForm>& forms);

bool projectively_equal(const Point& a, const Point& b);
// Scale so that the first nonzero coordinate is 1 (number fields), or to
// primitive integers with first nonzero coordinate positive (rationals).
Point canonical_point(const Point& p);
std::string point_to_string(const Point& p);

}  // namespace jumploci

#endif
