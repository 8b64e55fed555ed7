#ifndef JUMPLOCI_SCALAR_HPP
#define JUMPLOCI_SCALAR_HPP

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace jumploci {

// Q[t]/(p(t)) for a monic p with rational coefficients.  Instances are
// interned so that pointer equality means field equality.
class NumberField {
 public:
  // coeffs holds p from constant term upward, leading 1 included.
  static const NumberField* intern(const std::vector<mpq_class>& coeffs);

  int degree() const { return static_cast<int>(min_poly_.size()) - 1; }
  const std::vector<mpq_class>& min_poly() const { return min_poly_; }
  // Irreducibility is proved for degree <= 3 and only assumed above that.
  bool irreducibility_verified() const { return verified_; }
  std::string to_string() const;

 private:
  explicit NumberField(std::vector<mpq_class> coeffs);
  std::vector<mpq_class> min_poly_;
  bool verified_ = false;
};

class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : a_(v) {}  // NOLINT
  Scalar(int v) : a_(v) {}   // NOLINT
  Scalar(const mpq_class& v) : a_(v) { a_.canonicalize(); }  // NOLINT
  Scalar(const mpz_class& v) : a_(v) {}                      // NOLINT

  static Scalar generator(const NumberField* field);
  // residue r_0 + r_1 t + ... ; reduced modulo the minimal polynomial.
  static Scalar from_residue(const NumberField* field, std::vector<mpq_class> residue);

  bool is_zero() const { return hi_.empty() && sgn(a_) == 0; }
  bool is_one() const { return hi_.empty() && a_ == 1; }
  bool is_rational() const { return hi_.empty(); }
  const mpq_class& rational() const;
  const mpq_class& constant_part() const { return a_; }
  // Coefficients of the residue, padded to the field degree (1 for Q).
  std::vector<mpq_class> residue() const;
  const NumberField* field() const { return field_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Largest bit length among numerators and denominators.
  std::size_t bit_length() const;
  std::string to_string() const;

 private:
  void attach(const NumberField* f);
  void trim();

  mpq_class a_;
  std::vector<mpq_class> hi_;
  const NumberField* field_ = nullptr;
};

// The field shared by two scalars, or nullptr for Q; throws on mismatch.
const NumberField* common_field(const NumberField* a, const NumberField* b);

}  // namespace jumploci

#endif
