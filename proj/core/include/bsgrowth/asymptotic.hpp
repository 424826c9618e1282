#ifndef BSGROWTH_ASYMPTOTIC_HPP
#define BSGROWTH_ASYMPTOTIC_HPP

#include <cstdint>

#include "bsgrowth/logvalue.hpp"
#include "bsgrowth/numth.hpp"

// Log-space evaluation of the asymptotic main terms for the number of
// order-dividing-m permutations and for subgroup growth, together with
// the bound/decay quantities used as convergence diagnostics. All "log"
// here is the natural logarithm; direct (non-log) evaluation of these
// quantities overflows doubles from n ~ 150 onwards.

namespace bsgrowth::asymptotic {

// Leading constant K of the main term:
//   K = m^{-1/2}          (m odd)
//   K = m^{-1/2} e^{-1/(2m)}  (m even)
// Rejects m < 2.
LogValue log_leading_constant(std::int64_t m);

// sum over proper divisors d of m of x^{d/m} / d, for x > 0.
// For integer x >= m this sum is strictly below x.
double proper_divisor_power_sum(std::int64_t m, double x);

// ln of the main term for the count of order-dividing-m permutations:
//   ln K + (1 - 1/m) x ln x - (1 - 1/m) x + proper_divisor_power_sum(m, x)
// Defined for real x >= 1 (real arguments are needed at x = n/2 and
// x = n - floor(n/ln n)).
LogValue log_hom_main_term(std::int64_t m, double x);

// ln of the subgroup-growth main term g(x) = x * (hom main term).
LogValue log_growth_main_term(std::int64_t m, double x);

enum class MainTerm { HomCount, SubgroupGrowth };

// exact / main-term ratio by log subtraction; ln(exact) is taken from
// the big integer with >= 12 significant digits. Rejects exact <= 0.
double ratio_to_main_term(const BigInt& exact, std::int64_t m, double x,
                          MainTerm term);

struct LogBoundPair {
  LogValue lhs;
  LogValue rhs;
};

// Cutoff used throughout the tail estimates: floor(n / ln n).
std::int64_t fixed_point_cutoff(std::int64_t n);

// Both sides of the binomial bound
//   binomial(n, t) < exp(3 t ln ln n),   t = floor(n / ln n),
// with the left side computed from the exact big-integer binomial.
// Requires n >= 16 (first n with ln ln n > 1).
LogBoundPair binomial_cutoff_bound(std::int64_t n);

// binomial(n, t) * F(n - t) / F(n) with F the hom main term and
// t = floor(n / ln n): a log-space upper bound for the census tail
// ratio. Strictly positive, tends to 0. Requires m >= 2, n >= 16.
LogValue census_tail_bound(std::int64_t m, std::int64_t n);

// n * 3^{2n/3} * g(n/2) / g(n): bounds the relative weight of the
// subgroup contributions that the growth main term does not cover.
// Evaluates g at the real argument n/2. Requires m >= 2, n >= 4.
LogValue correction_term_ratio(std::int64_t m, std::int64_t n);

struct SandwichBounds {
  LogValue lower;
  LogValue mid;    // g(n) itself
  LogValue upper;  // lower * e^n
};

// K n (n/e)^{dn} < g(n) < K n (n/e)^{dn} e^n with d = 1 - 1/m.
// Strict for all n >= m. Requires m >= 2.
SandwichBounds growth_sandwich(std::int64_t m, std::int64_t n);

// min(d^{2n/d}, 3^{2n/3}) in log space: the derivation-count bound for
// an index-d kernel section, capped by the Schreier-formula bound.
LogValue derivation_bound(std::int64_t n, std::int64_t d);

// Bound on the number of index-n maximal subgroups not arising from the
// free-product quotient: 0 for composite n, n^2 for prime n.
BigInt extra_maximal_bound(std::int64_t n);

} // namespace bsgrowth::asymptotic

#endif // BSGROWTH_ASYMPTOTIC_HPP
