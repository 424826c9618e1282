#include "bsgrowth/growth.hpp"

#include <cassert>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "bsgrowth/asymptotic.hpp"
#include "bsgrowth/errors.hpp"

namespace bsgrowth {

BSParams normalize(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0)
    throw std::invalid_argument("normalize: parameters must be nonzero");
  BSParams p;
  p.a = a;
  p.b = b;
  p.m = numth::gcd_abs(a, b);
  p.u = a / p.m;
  p.v = b / p.m;
  std::int64_t uv = 0;
  if (__builtin_mul_overflow(p.u, p.v, &uv))
    throw std::invalid_argument("normalize: |u*v| overflows 64 bits");
  p.rad_uv = numth::radical(uv);
  return p;
}

namespace growth {

namespace {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t p = 2; p <= n / p; ++p)
    if (n % p == 0) return false;
  return true;
}

bool coprime_to_both(std::int64_t d, std::int64_t x, std::int64_t y) {
  return numth::gcd_abs(d, x) == 1 && numth::gcd_abs(d, y) == 1;
}

} // namespace

GroupDescriptor GroupDescriptor::baumslag_solitar(const BSParams& p) {
  GroupDescriptor g;
  g.kind = GroupKind::BaumslagSolitar;
  g.params = p;
  return g;
}

GroupDescriptor GroupDescriptor::free_product(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("GroupDescriptor: free-product order must be >= 1");
  GroupDescriptor g;
  g.kind = GroupKind::FreeProductZmodM;
  g.m = m;
  return g;
}

GroupDescriptor GroupDescriptor::free_rank_one() { return GroupDescriptor{}; }

GroupDescriptor GroupDescriptor::z_inv_k(std::int64_t k) {
  if (k == 0) throw std::invalid_argument("GroupDescriptor: inverted element must be nonzero");
  GroupDescriptor g;
  g.kind = GroupKind::ZInvK;
  g.k = k;
  return g;
}

std::string GroupDescriptor::label() const {
  switch (kind) {
    case GroupKind::BaumslagSolitar:
      return "BS(" + std::to_string(params.a) + "," + std::to_string(params.b) + ")";
    case GroupKind::FreeProductZmodM:
      return "Z*Z/" + std::to_string(m) + "Z";
    case GroupKind::FreeRankOne:
      return "Z";
    case GroupKind::ZInvK:
      return "Z[1/" + std::to_string(k) + "]";
  }
  return "?";
}

void GrowthSeries::validate() const {
  for (const auto& [n, value] : values) {
    if (value < 0)
      throw ConsistencyError("GrowthSeries: negative count at n=" + std::to_string(n));
  }
  if (kind == SeriesKind::AllSubgroups) {
    auto it = values.find(1);
    if (it != values.end() && it->second != 1)
      throw ConsistencyError("GrowthSeries: subgroup count at n=1 must be 1");
  }
}

std::vector<BigInt> order_dividing_counts(std::int64_t m, std::int64_t max_n) {
  if (m < 1) throw std::invalid_argument("order_dividing_counts: m must be >= 1");
  if (max_n < 0) throw std::invalid_argument("order_dividing_counts: max_n must be >= 0");
  const numth::DivisorSet divs = numth::divisors(m);
  std::vector<BigInt> counts(static_cast<std::size_t>(max_n) + 1);
  counts[0] = 1;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    BigInt total = 0;
    for (std::int64_t d : divs) {
      if (d > n) break;
      // number of d-cycles through a marked point: (n-1)(n-2)...(n-d+1)
      BigInt ways = 1;
      for (std::int64_t i = 1; i < d; ++i) ways *= n - i;
      total += ways * counts[static_cast<std::size_t>(n - d)];
    }
    counts[static_cast<std::size_t>(n)] = total;
  }
  return counts;
}

BigInt count_order_dividing(std::int64_t m, std::int64_t n) {
  if (m < 1) throw std::invalid_argument("count_order_dividing: m must be >= 1");
  if (n < 0) throw std::invalid_argument("count_order_dividing: n must be >= 0");
  static std::mutex cache_mutex;
  static std::map<std::int64_t, std::shared_ptr<const std::vector<BigInt>>> cache;
  std::shared_ptr<const std::vector<BigInt>> prefix;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(m);
    if (it != cache.end()) prefix = it->second;
    if (!prefix || static_cast<std::int64_t>(prefix->size()) <= n) {
      // grow geometrically so a scan 1..N still costs one pass overall
      std::int64_t target = std::max<std::int64_t>(n, 64);
      if (prefix) target = std::max(target, 2 * static_cast<std::int64_t>(prefix->size()));
      prefix = std::make_shared<const std::vector<BigInt>>(order_dividing_counts(m, target));
      cache[m] = prefix;
    }
  }
  return (*prefix)[static_cast<std::size_t>(n)];
}

std::vector<BigInt> fixed_point_free_counts(std::int64_t m, std::int64_t max_n) {
  if (m < 1) throw std::invalid_argument("fixed_point_free_counts: m must be >= 1");
  if (max_n < 0) throw std::invalid_argument("fixed_point_free_counts: max_n must be >= 0");
  const numth::DivisorSet divs = numth::divisors(m);
  std::vector<BigInt> counts(static_cast<std::size_t>(max_n) + 1);
  counts[0] = 1;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    BigInt total = 0;
    for (std::int64_t d : divs) {
      if (d == 1) continue;  // a 1-cycle is a fixed point
      if (d > n) break;
      BigInt ways = 1;
      for (std::int64_t i = 1; i < d; ++i) ways *= n - i;
      total += ways * counts[static_cast<std::size_t>(n - d)];
    }
    counts[static_cast<std::size_t>(n)] = total;
  }
  return counts;
}

BigInt hom_count_free_product(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1)
    throw std::invalid_argument("hom_count_free_product: need m >= 1, n >= 1");
  return numth::factorial(n) * count_order_dividing(m, n);
}

HallResult hall_counts(const std::vector<BigInt>& hom, std::int64_t max_n,
                       GroupDescriptor group) {
  if (max_n < 1) throw std::invalid_argument("hall_counts: max_n must be >= 1");
  if (static_cast<std::int64_t>(hom.size()) <= max_n)
    throw std::invalid_argument("hall_counts: hom sequence shorter than max_n");
  if (hom[1] != 1)
    throw std::invalid_argument("hall_counts: hom count at n=1 must be 1");

  std::vector<BigInt> trans(static_cast<std::size_t>(max_n) + 1);
  HallResult result;
  result.transitive.kind = SeriesKind::TransitiveReps;
  result.transitive.group = group;
  result.transitive.method = Method::Hall;
  result.subgroups.kind = SeriesKind::AllSubgroups;
  result.subgroups.group = group;
  result.subgroups.method = Method::Hall;

  BigInt fact = 1;  // (n-1)! maintained incrementally
  for (std::int64_t n = 1; n <= max_n; ++n) {
    BigInt t = hom[static_cast<std::size_t>(n)];
    BigInt binom = 1;  // binomial(n-1, k-1), updated along k
    for (std::int64_t k = 1; k < n; ++k) {
      t -= binom * trans[static_cast<std::size_t>(k)] * hom[static_cast<std::size_t>(n - k)];
      binom = binom * (n - k) / k;  // exact division
    }
    if (t < 0)
      throw ConsistencyError("hall_counts: negative transitive count at n=" +
                             std::to_string(n) + " (invalid hom sequence)");
    if (n > 1) fact *= n - 1;
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), fact.get_mpz_t());
    if (r != 0)
      throw ConsistencyError("hall_counts: transitive count at n=" + std::to_string(n) +
                             " not divisible by (n-1)! (invalid hom sequence)");
    trans[static_cast<std::size_t>(n)] = t;
    result.transitive.values[n] = t;
    result.subgroups.values[n] = q;
  }
  result.subgroups.validate();
  return result;
}

GrowthSeries free_product_subgroup_series(std::int64_t m, std::int64_t max_n) {
  if (m < 1 || max_n < 1)
    throw std::invalid_argument("free_product_subgroup_series: need m >= 1, max_n >= 1");
  std::vector<BigInt> counts = order_dividing_counts(m, max_n);
  std::vector<BigInt> hom(static_cast<std::size_t>(max_n) + 1);
  BigInt fact = 1;
  hom[0] = 1;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    fact *= n;
    hom[static_cast<std::size_t>(n)] = fact * counts[static_cast<std::size_t>(n)];
  }
  return hall_counts(hom, max_n, GroupDescriptor::free_product(m)).subgroups;
}

BigInt gelman_count(const BSParams& params, std::int64_t n) {
  if (!params.coprime())
    throw std::invalid_argument("gelman_count: requires gcd(a,b) = 1");
  if (n < 1) throw std::invalid_argument("gelman_count: n must be >= 1");
  // Own divisor walk, deliberately not shared with the derivation-sum
  // route: gcd(d, ab) = 1 iff d is coprime to both factors.
  BigInt sum = 0;
  for (std::int64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    if (coprime_to_both(d, params.a, params.b)) sum += d;
    const std::int64_t e = n / d;
    if (e != d && coprime_to_both(e, params.a, params.b)) sum += e;
  }
  return sum;
}

int subgroup_count_z_inv_k(std::int64_t k, std::int64_t n) {
  if (k == 0) throw std::invalid_argument("subgroup_count_z_inv_k: k must be nonzero");
  if (n < 1) throw std::invalid_argument("subgroup_count_z_inv_k: n must be >= 1");
  return numth::gcd_abs(n, numth::radical(k)) == 1 ? 1 : 0;
}

BigInt derivation_count_z(std::int64_t d) {
  if (d < 1) throw std::invalid_argument("derivation_count_z: d must be >= 1");
  return BigInt(d);
}

BigInt semidirect_count(const BSParams& params, std::int64_t n) {
  if (!params.coprime())
    throw std::invalid_argument("semidirect_count: requires gcd(a,b) = 1");
  if (n < 1) throw std::invalid_argument("semidirect_count: n must be >= 1");
  std::int64_t ab = 0;
  if (__builtin_mul_overflow(params.a, params.b, &ab))
    throw std::invalid_argument("semidirect_count: |a*b| overflows 64 bits");
  // One summand per factorization n = (n/d) * d: a single subgroup of the
  // free quotient at index n/d, at most one kernel subgroup of index d,
  // and d derivations twisting the extension.
  BigInt sum = 0;
  for (std::int64_t d : numth::divisors(n))
    sum += BigInt(subgroup_count_z_inv_k(ab, d)) * derivation_count_z(d);
  return sum;
}

BigInt max_count_coprime(const BSParams& params, std::int64_t n) {
  if (!params.coprime())
    throw std::invalid_argument("max_count_coprime: requires gcd(a,b) = 1");
  if (n < 1) throw std::invalid_argument("max_count_coprime: n must be >= 1");
  if (!is_prime(n)) return 0;
  if (!coprime_to_both(n, params.a, params.b)) return 0;
  return BigInt(n) + 1;
}

BigInt FixCensus::total() const {
  BigInt sum = 0;
  for (const BigInt& c : counts) sum += c;
  return sum;
}

FixCensus fix_census(std::int64_t m, std::int64_t n) {
  if (m < 2) throw std::invalid_argument("fix_census: m must be >= 2");
  if (n < 1) throw std::invalid_argument("fix_census: n must be >= 1");
  const std::vector<BigInt> full = order_dividing_counts(m, n);
  // fixed-point-free counts by inclusion-exclusion over the full counts;
  // an independent route from the no-1-cycle recurrence, cross-checked in
  // the tests
  std::vector<BigInt> fpf(static_cast<std::size_t>(n) + 1);
  for (std::int64_t j = 0; j <= n; ++j) {
    BigInt acc = 0;
    BigInt binom = 1;  // binomial(j, i)
    for (std::int64_t i = 0; i <= j; ++i) {
      const BigInt& term = full[static_cast<std::size_t>(j - i)];
      if (i % 2 == 0)
        acc += binom * term;
      else
        acc -= binom * term;
      if (i < j) binom = binom * (j - i) / (i + 1);
    }
    fpf[static_cast<std::size_t>(j)] = acc;
  }

  FixCensus census;
  census.m = m;
  census.n = n;
  census.counts.resize(static_cast<std::size_t>(n) + 1);
  BigInt binom = 1;  // binomial(n, k)
  for (std::int64_t k = 0; k <= n; ++k) {
    census.counts[static_cast<std::size_t>(k)] = binom * fpf[static_cast<std::size_t>(n - k)];
    if (k < n) binom = binom * (n - k) / (k + 1);
  }
  if (census.total() != full[static_cast<std::size_t>(n)])
    throw ConsistencyError("fix_census: census total does not match full count");
  return census;
}

BigRat census_ratio_exact(std::int64_t m, std::int64_t n) {
  if (n < 3) throw std::invalid_argument("census_ratio: n must be >= 3");
  const FixCensus census = fix_census(m, n);
  const std::int64_t cutoff = asymptotic::fixed_point_cutoff(n);
  BigInt tail = 0;
  for (std::int64_t k = cutoff; k <= n; ++k)
    tail += census.counts[static_cast<std::size_t>(k)];
  BigRat ratio(tail, census.total());
  ratio.canonicalize();
  return ratio;
}

double census_ratio(std::int64_t m, std::int64_t n) {
  return census_ratio_exact(m, n).get_d();
}

namespace {

BigInt shalev_term_sum(const BSParams& params, std::int64_t n,
                       const GrowthSeries& free_product_counts) {
  BigInt sum = 0;
  for (std::int64_t d : numth::divisors(n)) {
    if (!coprime_to_both(d, params.u, params.v)) continue;
    // Derivation factor min(d^{2n/d}, 3^{2n/3}). Over the integers
    // x^{1/x} peaks at x = 3, so the d-power side never exceeds the cap;
    // assert rather than re-derive the cap as an integer.
    assert(static_cast<double>(2 * n / d) * std::log(static_cast<double>(std::max<std::int64_t>(d, 1))) <=
           (2.0 * static_cast<double>(n) / 3.0) * std::log(3.0) + 1e-9);
    BigInt factor;
    mpz_ui_pow_ui(factor.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(2 * n / d));
    sum += free_product_counts.values.at(n / d) * factor;
  }
  return sum;
}

} // namespace

BigInt shalev_upper_bound(const BSParams& params, std::int64_t n) {
  if (params.coprime())
    throw std::invalid_argument("shalev_upper_bound: requires gcd(a,b) > 1");
  if (n < 1) throw std::invalid_argument("shalev_upper_bound: n must be >= 1");
  return shalev_term_sum(params, n, free_product_subgroup_series(params.m, n));
}

GrowthSeries shalev_upper_bound_series(const BSParams& params, std::int64_t max_n) {
  if (params.coprime())
    throw std::invalid_argument("shalev_upper_bound_series: requires gcd(a,b) > 1");
  if (max_n < 1) throw std::invalid_argument("shalev_upper_bound_series: max_n must be >= 1");
  const GrowthSeries base = free_product_subgroup_series(params.m, max_n);
  GrowthSeries series;
  series.kind = SeriesKind::AllSubgroups;
  series.group = GroupDescriptor::baumslag_solitar(params);
  series.method = Method::ClosedForm;
  for (std::int64_t n = 1; n <= max_n; ++n)
    series.values[n] = shalev_term_sum(params, n, base);
  return series;
}

} // namespace growth
} // namespace bsgrowth
