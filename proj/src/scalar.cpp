#include "jumploci/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "jumploci/errors.hpp"
#include "jumploci/univariate.hpp"

namespace jumploci {

namespace {

using QVec = std::vector<mpq_class>;

void trim_q(QVec& v) {
  while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

QVec q_mul(const QVec& a, const QVec& b) {
  if (a.empty() || b.empty()) return {};
  QVec r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim_q(r);
  return r;
}

// remainder of a modulo a monic m
void q_reduce(QVec& a, const QVec& m) {
  const std::size_t n = m.size() - 1;
  trim_q(a);
  while (a.size() > n) {
    mpq_class c = a.back();
    std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i < n; ++i) a[shift + i] -= c * m[i];
    a.pop_back();
    trim_q(a);
  }
}

// quotient and remainder for a general nonzero divisor
void q_divmod(QVec a, const QVec& b, QVec& q, QVec& r) {
  trim_q(a);
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
  const mpq_class& lb = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    mpq_class c = a.back() / lb;
    std::size_t shift = a.size() - b.size();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    a.pop_back();
    trim_q(a);
  }
  trim_q(q);
  r = a;
}

QVec q_sub(const QVec& a, const QVec& b) {
  QVec r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim_q(r);
  return r;
}

struct FieldRegistry {
  std::mutex mutex;
  std::vector<std::unique_ptr<NumberField>> fields;
};

FieldRegistry& registry() {
  static FieldRegistry r;
  return r;
}

}  // namespace

NumberField::NumberField(std::vector<mpq_class> coeffs) : min_poly_(std::move(coeffs)) {}

const NumberField* NumberField::intern(const std::vector<mpq_class>& coeffs) {
  QVec c = coeffs;
  trim_q(c);
  if (c.size() < 3) throw MathError(ErrorCode::InvalidField, "minimal polynomial must have degree >= 2");
  if (c.back() != 1) throw MathError(ErrorCode::InvalidField, "minimal polynomial must be monic");
  for (auto& x : c) x.canonicalize();
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mutex);
  for (auto& f : reg.fields)
    if (f->min_poly_ == c) return f.get();
  std::vector<Scalar> sc(c.begin(), c.end());
  if (!rational_roots(UPoly(sc)).empty())
    throw MathError(ErrorCode::InvalidField, "minimal polynomial has a rational root");
  std::unique_ptr<NumberField> f(new NumberField(c));
  f->verified_ = f->degree() <= 3;
  reg.fields.push_back(std::move(f));
  return reg.fields.back().get();
}

std::string NumberField::to_string() const {
  std::vector<Scalar> sc(min_poly_.begin(), min_poly_.end());
  return UPoly(sc).to_string("t");
}

const NumberField* common_field(const NumberField* a, const NumberField* b) {
  if (!a) return b;
  if (!b || a == b) return a;
  throw MathError(ErrorCode::FieldMismatch, "scalars from different number fields");
}

Scalar Scalar::generator(const NumberField* field) {
  return from_residue(field, {mpq_class(0), mpq_class(1)});
}

Scalar Scalar::from_residue(const NumberField* field, std::vector<mpq_class> residue) {
  Scalar s;
  for (auto& x : residue) x.canonicalize();
  if (field) q_reduce(residue, field->min_poly());
  trim_q(residue);
  if (residue.empty()) return s;
  if (residue.size() > 1 && !field) throw MathError(ErrorCode::InvalidField, "residue without a field");
  s.a_ = residue[0];
  s.hi_.assign(residue.begin() + 1, residue.end());
  s.field_ = field;
  return s;
}

const mpq_class& Scalar::rational() const {
  if (!hi_.empty()) throw MathError(ErrorCode::InvalidArgument, "scalar is not rational");
  return a_;
}

std::vector<mpq_class> Scalar::residue() const {
  std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  std::vector<mpq_class> r(std::max<std::size_t>(n, 1 + hi_.size()));
  r[0] = a_;
  for (std::size_t i = 0; i < hi_.size(); ++i) r[i + 1] = hi_[i];
  return r;
}

void Scalar::attach(const NumberField* f) { field_ = common_field(field_, f); }

void Scalar::trim() {
  while (!hi_.empty() && sgn(hi_.back()) == 0) hi_.pop_back();
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  r.a_ = -r.a_;
  for (auto& x : r.hi_) x = -x;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!o.hi_.empty() || o.field_) attach(o.field_);
  a_ += o.a_;
  if (!o.hi_.empty()) {
    if (hi_.size() < o.hi_.size()) hi_.resize(o.hi_.size());
    for (std::size_t i = 0; i < o.hi_.size(); ++i) hi_[i] += o.hi_[i];
    trim();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!o.hi_.empty() || o.field_) attach(o.field_);
  a_ -= o.a_;
  if (!o.hi_.empty()) {
    if (hi_.size() < o.hi_.size()) hi_.resize(o.hi_.size());
    for (std::size_t i = 0; i < o.hi_.size(); ++i) hi_[i] -= o.hi_[i];
    trim();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (hi_.empty() && o.hi_.empty()) {
    a_ *= o.a_;
    if (o.field_) attach(o.field_);
    return *this;
  }
  attach(o.field_);
  if (o.hi_.empty()) {
    a_ *= o.a_;
    for (auto& x : hi_) x *= o.a_;
    trim();
    return *this;
  }
  if (hi_.empty()) {
    mpq_class c = a_;
    a_ = o.a_ * c;
    hi_ = o.hi_;
    for (auto& x : hi_) x *= c;
    trim();
    return *this;
  }
  QVec prod = q_mul(residue(), o.residue());
  q_reduce(prod, field_->min_poly());
  *this = from_residue(field_, prod);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw MathError(ErrorCode::DivisionByZero, "inverse of zero");
  if (hi_.empty()) {
    Scalar r;
    r.a_ = 1 / a_;
    r.field_ = field_;
    return r;
  }
  // extended Euclid: s*a + u*m = g with g constant
  QVec m = field_->min_poly();
  QVec a = residue();
  trim_q(a);
  QVec r0 = m, r1 = a, s0, s1{mpq_class(1)};
  while (r1.size() > 1) {
    QVec q, r;
    q_divmod(r0, r1, q, r);
    QVec s2 = q_sub(s0, q_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty()) throw MathError(ErrorCode::InvalidField, "non-invertible residue; minimal polynomial is reducible");
  mpq_class g = r1[0];
  for (auto& x : s1) x /= g;
  return from_residue(field_, s1);
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.hi_.empty()) {
    if (sgn(o.a_) == 0) throw MathError(ErrorCode::DivisionByZero, "division by zero");
    a_ /= o.a_;
    for (auto& x : hi_) x /= o.a_;
    if (o.field_) attach(o.field_);
    return *this;
  }
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.a_ != b.a_ || a.hi_.size() != b.hi_.size()) return false;
  for (std::size_t i = 0; i < a.hi_.size(); ++i)
    if (a.hi_[i] != b.hi_[i]) return false;
  if (!a.hi_.empty() && a.field_ != b.field_) return false;
  return true;
}

std::size_t Scalar::bit_length() const {
  std::size_t best = std::max(mpz_sizeinbase(a_.get_num_mpz_t(), 2), mpz_sizeinbase(a_.get_den_mpz_t(), 2));
  for (auto& x : hi_)
    best = std::max({best, mpz_sizeinbase(x.get_num_mpz_t(), 2), mpz_sizeinbase(x.get_den_mpz_t(), 2)});
  return best;
}

std::string Scalar::to_string() const {
  if (hi_.empty()) return a_.get_str();
  std::vector<Scalar> sc;
  for (auto& x : residue()) sc.emplace_back(x);
  return UPoly(sc).to_string("t");
}

}  // namespace jumploci
