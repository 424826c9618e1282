#include "bsgrowth/logvalue.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace bsgrowth {

LogValue LogValue::from_ln(double ln) {
  LogValue v;
  v.ln_ = ln;
  v.zero_ = false;
  return v;
}

LogValue LogValue::from_value(double value) {
  if (value < 0.0) throw std::domain_error("LogValue::from_value: negative value");
  if (value == 0.0) return zero();
  return from_ln(std::log(value));
}

LogValue LogValue::from_integer(const mpz_class& n) {
  if (n < 0) throw std::domain_error("LogValue::from_integer: negative value");
  if (n == 0) return zero();
  return from_ln(ln_of_integer(n));
}

double LogValue::ln() const {
  if (zero_) throw std::domain_error("LogValue::ln: exact zero");
  return ln_;
}

double LogValue::to_double() const {
  if (zero_) return 0.0;
  return std::exp(ln_);
}

LogValue LogValue::operator*(const LogValue& o) const {
  if (zero_ || o.zero_) return zero();
  return from_ln(ln_ + o.ln_);
}

LogValue LogValue::operator/(const LogValue& o) const {
  if (o.zero_) throw std::domain_error("LogValue: division by exact zero");
  if (zero_) return zero();
  return from_ln(ln_ - o.ln_);
}

LogValue LogValue::operator+(const LogValue& o) const {
  if (zero_) return o;
  if (o.zero_) return *this;
  // log-sum-exp anchored at the larger exponent
  double hi = ln_, lo = o.ln_;
  if (hi < lo) std::swap(hi, lo);
  return from_ln(hi + std::log1p(std::exp(lo - hi)));
}

LogValue LogValue::pow(double e) const {
  if (zero_) {
    if (e == 0.0) return one();
    if (e < 0.0) throw std::domain_error("LogValue::pow: zero to negative power");
    return zero();
  }
  return from_ln(ln_ * e);
}

bool LogValue::operator==(const LogValue& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return ln_ == o.ln_;
}

bool LogValue::operator<(const LogValue& o) const {
  if (zero_) return !o.zero_;
  if (o.zero_) return false;
  return ln_ < o.ln_;
}

std::ostream& operator<<(std::ostream& os, const LogValue& v) {
  if (v.is_zero()) return os << "0";
  return os << "exp(" << v.ln() << ")";
}

double ln_of_integer(const mpz_class& n) {
  if (n <= 0) throw std::domain_error("ln_of_integer: nonpositive argument");
  signed long exp2 = 0;
  // n = d * 2^exp2 with d in [0.5, 1); both factors carry full precision
  double d = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(d) + static_cast<double>(exp2) * M_LN2;
}

} // namespace bsgrowth
