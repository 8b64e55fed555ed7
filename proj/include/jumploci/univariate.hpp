#ifndef JUMPLOCI_UNIVARIATE_HPP
#define JUMPLOCI_UNIVARIATE_HPP

#include <optional>
#include <string>
#include <vector>

#include "jumploci/scalar.hpp"

namespace jumploci {

// Dense univariate polynomial over K, coefficients from the constant term up.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Scalar> coeffs);
  static UPoly monomial(int degree, const Scalar& c = Scalar(1));

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  const Scalar& leading() const { return c_.back(); }
  const NumberField* field() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const Scalar& s);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  Scalar evaluate(const Scalar& x) const;
  UPoly derivative() const;
  UPoly monic() const;
  std::string to_string(const std::string& var) const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

void divmod(const UPoly& a, const UPoly& b, UPoly& quotient, UPoly& remainder);
UPoly exact_quotient(const UPoly& a, const UPoly& b);
// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
UPoly squarefree_part(const UPoly& p);
// Multiplicity of the root x0 in p (p nonzero).
int root_multiplicity(const UPoly& p, const Scalar& x0);

// Distinct rational roots of a polynomial with rational coefficients.
std::vector<mpq_class> rational_roots(const UPoly& p);
// Distinct roots lying in `field` (rationals when field is null).  Quadratic
// fields are handled through two p-adic embeddings; for larger fields only
// rational roots are reported.
std::vector<Scalar> roots_in_field(const UPoly& p, const NumberField* field);

// Rational number n/d with |n|,|d| <= sqrt(m/2) and n/d = a mod m, if any.
std::optional<mpq_class> rational_reconstruct(const mpz_class& a, const mpz_class& m);

}  // namespace jumploci

#endif
