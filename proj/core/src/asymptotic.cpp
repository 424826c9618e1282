#include "bsgrowth/asymptotic.hpp"

#include <cmath>
#include <stdexcept>

namespace bsgrowth::asymptotic {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

} // namespace

LogValue log_leading_constant(std::int64_t m) {
  if (m < 2) throw std::invalid_argument("log_leading_constant: m must be >= 2");
  double ln = -0.5 * std::log(static_cast<double>(m));
  if (m % 2 == 0) ln -= 1.0 / (2.0 * static_cast<double>(m));
  return LogValue::from_ln(ln);
}

double proper_divisor_power_sum(std::int64_t m, double x) {
  if (m < 2) throw std::invalid_argument("proper_divisor_power_sum: m must be >= 2");
  if (!(x > 0.0)) throw std::invalid_argument("proper_divisor_power_sum: x must be positive");
  double sum = 0.0;
  for (std::int64_t d : numth::divisors(m)) {
    if (d == m) break;
    sum += std::pow(x, static_cast<double>(d) / static_cast<double>(m)) /
           static_cast<double>(d);
  }
  return sum;
}

LogValue log_hom_main_term(std::int64_t m, double x) {
  if (m < 2) throw std::invalid_argument("log_hom_main_term: m must be >= 2");
  if (!(x >= 1.0)) throw std::invalid_argument("log_hom_main_term: x must be >= 1");
  const double delta = 1.0 - 1.0 / static_cast<double>(m);
  double ln = log_leading_constant(m).ln();
  ln += delta * x * std::log(x);
  ln -= delta * x;
  ln += proper_divisor_power_sum(m, x);
  return LogValue::from_ln(ln);
}

LogValue log_growth_main_term(std::int64_t m, double x) {
  return LogValue::from_ln(std::log(x) + log_hom_main_term(m, x).ln());
}

double ratio_to_main_term(const BigInt& exact, std::int64_t m, double x,
                          MainTerm term) {
  if (exact <= 0) throw std::invalid_argument("ratio_to_main_term: exact count must be positive");
  double ln_main = (term == MainTerm::HomCount)
                       ? log_hom_main_term(m, x).ln()
                       : log_growth_main_term(m, x).ln();
  return std::exp(ln_of_integer(exact) - ln_main);
}

std::int64_t fixed_point_cutoff(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("fixed_point_cutoff: n must be >= 3");
  return static_cast<std::int64_t>(
      std::floor(static_cast<double>(n) / std::log(static_cast<double>(n))));
}

LogBoundPair binomial_cutoff_bound(std::int64_t n) {
  if (n < 16) throw std::invalid_argument("binomial_cutoff_bound: n must be >= 16");
  const std::int64_t t = fixed_point_cutoff(n);
  LogValue lhs = LogValue::from_integer(numth::binomial(n, t));
  double lnln = std::log(std::log(static_cast<double>(n)));
  LogValue rhs = LogValue::from_ln(3.0 * static_cast<double>(t) * lnln);
  return {lhs, rhs};
}

LogValue census_tail_bound(std::int64_t m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("census_tail_bound: m must be >= 2");
  if (n < 16) throw std::invalid_argument("census_tail_bound: n must be >= 16");
  const std::int64_t t = fixed_point_cutoff(n);
  LogValue binom = LogValue::from_integer(numth::binomial(n, t));
  LogValue shrunk = log_hom_main_term(m, static_cast<double>(n - t));
  LogValue full = log_hom_main_term(m, static_cast<double>(n));
  return binom * shrunk / full;
}

LogValue correction_term_ratio(std::int64_t m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("correction_term_ratio: m must be >= 2");
  if (n < 4) throw std::invalid_argument("correction_term_ratio: n must be >= 4");
  const double x = static_cast<double>(n);
  double ln = std::log(x);
  ln += (2.0 * x / 3.0) * std::log(3.0);
  ln += log_growth_main_term(m, x / 2.0).ln();
  ln -= log_growth_main_term(m, x).ln();
  return LogValue::from_ln(ln);
}

SandwichBounds growth_sandwich(std::int64_t m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("growth_sandwich: m must be >= 2");
  if (n < m) throw std::invalid_argument("growth_sandwich: need n >= m");
  const double x = static_cast<double>(n);
  const double delta = 1.0 - 1.0 / static_cast<double>(m);
  double ln_lower = log_leading_constant(m).ln() + std::log(x) +
                    delta * x * (std::log(x) - 1.0);
  return {LogValue::from_ln(ln_lower),
          log_growth_main_term(m, x),
          LogValue::from_ln(ln_lower + x)};
}

LogValue derivation_bound(std::int64_t n, std::int64_t d) {
  if (n < 1 || d < 1) throw std::invalid_argument("derivation_bound: need n >= 1, d >= 1");
  const double x = static_cast<double>(n);
  double ln_a = (2.0 * x / static_cast<double>(d)) * std::log(static_cast<double>(d));
  double ln_b = (2.0 * x / 3.0) * std::log(3.0);
  return LogValue::from_ln(std::min(ln_a, ln_b));
}

BigInt extra_maximal_bound(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("extra_maximal_bound: n must be >= 2");
  if (!is_prime(n)) return 0;
  return BigInt(n) * n;
}

} // namespace bsgrowth::asymptotic
