#include "bsgrowth/montecarlo.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "bsgrowth/asymptotic.hpp"
#include "bsgrowth/errors.hpp"
#include "bsgrowth/growth.hpp"
#include "bsgrowth/permgrp.hpp"

namespace bsgrowth::permgrp {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

} // namespace

std::mt19937_64 trial_rng(std::uint64_t seed, std::int64_t trial_index) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(trial_index))));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  // rejection keeps the draw exactly uniform (std::uniform_int_distribution
  // is implementation-defined, so it would break cross-platform runs)
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw >= limit);
  return draw % bound;
}

BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound) {
  if (bound <= 0) throw std::invalid_argument("uniform_below: bound must be positive");
  if (bound == 1) return 0;
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  while (true) {
    BigInt candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      candidate <<= 64;
      candidate += BigInt(rng());
    }
    mpz_fdiv_r_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(),
                    static_cast<mp_bitcnt_t>(bits));
    if (candidate < bound) return candidate;
  }
}

Permutation sample_uniform_permutation(int n, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("sample_uniform_permutation: n must be >= 1");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(i) + 1));
    std::swap(images[static_cast<std::size_t>(i)], images[static_cast<std::size_t>(j)]);
  }
  return Permutation(std::move(images));
}

namespace {

// exact sampling state shared by all trials of one run
struct SamplerTables {
  std::int64_t m = 0;
  int n = 0;
  std::vector<BigInt> census;          // c_k, k = 0..n
  BigInt census_total;
  std::vector<BigInt> fpf;             // fixed-point-free counts 0..n
  numth::DivisorSet cycle_lengths;     // divisors of m

  SamplerTables(std::int64_t m_, int n_) : m(m_), n(n_) {
    growth::FixCensus c = growth::fix_census(m, n);
    census = std::move(c.counts);
    census_total = 0;
    for (const BigInt& x : census) census_total += x;
    fpf = growth::fixed_point_free_counts(m, n);
    cycle_lengths = numth::divisors(m);
  }
};

// uniform fixed-point-free order-dividing permutation on the given
// points, written into images
void sample_fixed_point_free(const SamplerTables& tables, std::vector<int> points,
                             std::vector<int>& images, std::mt19937_64& rng) {
  std::sort(points.begin(), points.end());
  while (!points.empty()) {
    const auto remaining = static_cast<std::int64_t>(points.size());
    // weight of anchoring a d-cycle at the least point:
    // (remaining-1)(remaining-2)...(remaining-d+1) * fpf(remaining-d)
    std::vector<std::pair<std::int64_t, BigInt>> weighted;
    BigInt total = 0;
    for (std::int64_t d : tables.cycle_lengths) {
      if (d < 2) continue;
      if (d > remaining) break;
      BigInt w = tables.fpf[static_cast<std::size_t>(remaining - d)];
      for (std::int64_t i = 1; i < d; ++i) w *= remaining - i;
      total += w;
      weighted.emplace_back(d, std::move(w));
    }
    if (total != tables.fpf[static_cast<std::size_t>(remaining)])
      throw ConsistencyError("sample_fixed_point_free: weight total mismatch");
    BigInt draw = uniform_below(rng, total);
    std::int64_t length = 0;
    for (auto& [d, w] : weighted) {
      if (draw < w) {
        length = d;
        break;
      }
      draw -= w;
    }
    // ordered choice of the remaining cycle members
    std::vector<int> rest(points.begin() + 1, points.end());
    for (std::size_t i = 0; i + 1 < static_cast<std::size_t>(length); ++i) {
      const std::size_t j =
          i + static_cast<std::size_t>(uniform_below(
                  rng, static_cast<std::uint64_t>(rest.size() - i)));
      std::swap(rest[i], rest[j]);
    }
    std::vector<int> cycle{points[0]};
    cycle.insert(cycle.end(), rest.begin(), rest.begin() + (length - 1));
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i])] = cycle[(i + 1) % cycle.size()];
    // drop the used points
    std::vector<int> next;
    std::sort(cycle.begin(), cycle.end());
    std::set_difference(points.begin(), points.end(), cycle.begin(), cycle.end(),
                        std::back_inserter(next));
    points = std::move(next);
  }
}

Permutation sample_order_dividing_impl(const SamplerTables& tables, std::mt19937_64& rng) {
  const int n = tables.n;
  // fixed-point count from the exact census
  BigInt draw = uniform_below(rng, tables.census_total);
  int fixed = 0;
  while (draw >= tables.census[static_cast<std::size_t>(fixed)]) {
    draw -= tables.census[static_cast<std::size_t>(fixed)];
    ++fixed;
  }
  // uniform fixed set
  std::vector<int> points(static_cast<std::size_t>(n));
  std::iota(points.begin(), points.end(), 0);
  for (int i = 0; i < fixed; ++i) {
    const auto j = i + static_cast<int>(uniform_below(
                           rng, static_cast<std::uint64_t>(n - i)));
    std::swap(points[static_cast<std::size_t>(i)], points[static_cast<std::size_t>(j)]);
  }
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < fixed; ++i) {
    const int p = points[static_cast<std::size_t>(i)];
    images[static_cast<std::size_t>(p)] = p;
  }
  sample_fixed_point_free(tables,
                          std::vector<int>(points.begin() + fixed, points.end()),
                          images, rng);
  return Permutation(std::move(images));
}

} // namespace

Permutation sample_order_dividing(std::int64_t m, int n, std::mt19937_64& rng) {
  if (m < 2) throw std::invalid_argument("sample_order_dividing: m must be >= 2");
  if (n < 1) throw std::invalid_argument("sample_order_dividing: n must be >= 1");
  SamplerTables tables(m, n);
  return sample_order_dividing_impl(tables, rng);
}

MonteCarloResult monte_carlo_generation(std::int64_t m, int n, std::int64_t trials,
                                        std::uint64_t seed, int threads) {
  if (n < 3 || n > 20)
    throw std::invalid_argument("monte_carlo_generation: n must be in [3, 20]");
  if (m < 2) throw std::invalid_argument("monte_carlo_generation: m must be >= 2");
  if (trials < 1) throw std::invalid_argument("monte_carlo_generation: trials must be >= 1");

  const SamplerTables tables(m, n);
  const std::int64_t cutoff = asymptotic::fixed_point_cutoff(n);

  struct Tally {
    std::int64_t generating = 0;
    std::int64_t few_fixed = 0;
    std::int64_t generating_few_fixed = 0;
  };
  const int workers = static_cast<int>(
      std::max<std::int64_t>(1, std::min<std::int64_t>(threads, trials)));
  std::vector<Tally> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      Tally& t = parts[static_cast<std::size_t>(w)];
      for (std::int64_t i = w; i < trials; i += workers) {
        std::mt19937_64 rng = trial_rng(seed, i);
        const Permutation g = sample_order_dividing_impl(tables, rng);
        const Permutation s = sample_uniform_permutation(n, rng);
        const bool generates = is_alt_or_sym({g, s}, n);
        const bool few = fix_count(g) <= cutoff;
        t.generating += generates;
        t.few_fixed += few;
        t.generating_few_fixed += (generates && few);
      }
    });
  }
  for (std::thread& th : pool) th.join();

  MonteCarloResult r;
  r.m = m;
  r.n = n;
  r.trials = trials;
  r.seed = seed;
  for (const Tally& t : parts) {
    r.generating += t.generating;
    r.few_fixed += t.few_fixed;
    r.generating_few_fixed += t.generating_few_fixed;
  }
  r.fraction_alt_or_sym =
      static_cast<double>(r.generating) / static_cast<double>(trials);
  r.fraction_given_few_fixed =
      r.few_fixed > 0 ? static_cast<double>(r.generating_few_fixed) /
                            static_cast<double>(r.few_fixed)
                      : 0.0;
  return r;
}

} // namespace bsgrowth::permgrp
