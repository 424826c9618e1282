#ifndef BSGROWTH_LOGVALUE_HPP
#define BSGROWTH_LOGVALUE_HPP

#include <cstdint>
#include <iosfwd>

#include <gmpxx.h>

namespace bsgrowth {

// A nonnegative real carried as its natural logarithm, for quantities
// that overflow double precision (n^n-scale counts appear from n ~ 150).
// Multiplication and division are log additions; sums use the stable
// log-sum-exp form. Exact zero is tracked by a flag, not by -inf.
class LogValue {
public:
  LogValue() : ln_(0.0), zero_(true) {}

  static LogValue zero() { return LogValue(); }
  static LogValue one() { return from_ln(0.0); }

  static LogValue from_ln(double ln);
  // value must be >= 0
  static LogValue from_value(double value);
  // ln of an exact integer, good to ~15 significant digits even for
  // integers with millions of bits
  static LogValue from_integer(const mpz_class& n);

  bool is_zero() const { return zero_; }
  double ln() const;            // throws std::domain_error on exact zero
  double to_double() const;     // exp(ln); +inf when too large for double

  LogValue operator*(const LogValue& o) const;
  LogValue operator/(const LogValue& o) const;  // division by zero throws
  LogValue operator+(const LogValue& o) const;
  LogValue& operator*=(const LogValue& o) { return *this = *this * o; }
  LogValue& operator+=(const LogValue& o) { return *this = *this + o; }

  LogValue pow(double e) const;

  bool operator==(const LogValue& o) const;
  bool operator<(const LogValue& o) const;
  bool operator>(const LogValue& o) const { return o < *this; }
  bool operator<=(const LogValue& o) const { return !(o < *this); }
  bool operator>=(const LogValue& o) const { return !(*this < o); }

private:
  double ln_;
  bool zero_;
};

std::ostream& operator<<(std::ostream& os, const LogValue& v);

// ln of an exact positive integer (>= 12 significant digits); helper
// shared by LogValue::from_integer and ratio computations.
double ln_of_integer(const mpz_class& n);

} // namespace bsgrowth

#endif // BSGROWTH_LOGVALUE_HPP
