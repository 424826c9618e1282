#ifndef BSGROWTH_NUMTH_HPP
#define BSGROWTH_NUMTH_HPP

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "bsgrowth/logvalue.hpp"

namespace bsgrowth {

// Exact signed integers of unbounded magnitude (GMP-backed). Everything
// countable in this project (factorials to 5000!, hom counts, transitive
// counts) lives in this type; doubles appear only behind LogValue.
using BigInt = mpz_class;
using BigRat = mpq_class;

namespace numth {

// Positive divisors in strictly increasing order; always starts at 1 and
// ends at the number itself.
using DivisorSet = std::vector<std::int64_t>;

// All positive divisors of n, ascending. Rejects n <= 0.
DivisorSet divisors(std::int64_t n);

// Product of the distinct primes dividing |k|; radical(+-1) = 1.
// Rejects k = 0. Factorization is plain trial division with a 2/3 wheel;
// arguments here never exceed |a*b| of the user parameters.
std::int64_t radical(std::int64_t k);

// Number of positive divisors of m. Rejects m <= 0.
// Satisfies tau(m) <= sqrt(3m).
std::int64_t tau(std::int64_t m);

// Exact binomial coefficient; 0 whenever k < 0 or k > n. Rejects n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Exact n!. Rejects n < 0.
BigInt factorial(std::int64_t n);

// ln(n!) via lgamma, never via the big integer; accurate to at least
// 10 significant digits for every n (and ~15 in practice).
LogValue log_factorial(std::int64_t n);

// gcd on absolute values, gcd(0, x) = |x|.
std::int64_t gcd_abs(std::int64_t a, std::int64_t b);

} // namespace numth
} // namespace bsgrowth

#endif // BSGROWTH_NUMTH_HPP
