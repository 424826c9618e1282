#include "bsgrowth/numth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bsgrowth::numth {

DivisorSet divisors(std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("divisors: argument must be positive");
  DivisorSet small, large;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::int64_t radical(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("radical: argument must be nonzero");
  std::int64_t n = std::abs(k);
  std::int64_t rad = 1;
  for (std::int64_t p : {std::int64_t{2}, std::int64_t{3}}) {
    if (n % p == 0) {
      rad *= p;
      while (n % p == 0) n /= p;
    }
  }
  // 6k+-1 wheel
  for (std::int64_t p = 5; p <= n / p; p += (p % 6 == 5) ? 2 : 4) {
    if (n % p == 0) {
      rad *= p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) rad *= n;
  return rad;
}

std::int64_t tau(std::int64_t m) {
  if (m <= 0) throw std::invalid_argument("tau: argument must be positive");
  std::int64_t count = 0;
  for (std::int64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    count += (d == m / d) ? 1 : 2;
  }
  return count;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

LogValue log_factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("log_factorial: n must be nonnegative");
  return LogValue::from_ln(std::lgamma(static_cast<double>(n) + 1.0));
}

std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  a = std::abs(a);
  b = std::abs(b);
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace bsgrowth::numth
