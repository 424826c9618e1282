#ifndef BSGROWTH_MONTECARLO_HPP
#define BSGROWTH_MONTECARLO_HPP

#include <cstdint>
#include <random>

#include "bsgrowth/numth.hpp"
#include "bsgrowth/permutation.hpp"

// Seeded probe of the random-generation phenomenon: a uniform
// order-dividing-m permutation together with a uniform permutation
// generates the alternating or symmetric group with probability tending
// to 1, conditioned on few fixed points. Every trial is a pure function
// of (seed, trial index); results do not depend on thread scheduling.

namespace bsgrowth::permgrp {

struct MonteCarloResult {
  std::int64_t m = 0;
  int n = 0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t generating = 0;            // pairs generating Alt or Sym
  std::int64_t few_fixed = 0;             // trials with fix count <= cutoff
  std::int64_t generating_few_fixed = 0;  // generating among those
  double fraction_alt_or_sym = 0.0;
  double fraction_given_few_fixed = 0.0;  // 0 when no trial qualifies
};

// Requires 3 <= n <= 20 and trials >= 1.
MonteCarloResult monte_carlo_generation(std::int64_t m, int n, std::int64_t trials,
                                        std::uint64_t seed, int threads = 1);

// Uniform integer in [0, bound), by rejection from raw 64-bit draws;
// bound >= 1. Identical draw sequences on every platform.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
BigInt uniform_below(std::mt19937_64& rng, const BigInt& bound);

// Uniform permutation via Fisher-Yates over uniform_below.
Permutation sample_uniform_permutation(int n, std::mt19937_64& rng);

// Uniform permutation of order dividing m: the fixed-point count is
// drawn from the exact census, the fixed set uniformly, and the
// fixed-point-free part cycle by cycle with exact-count weights.
Permutation sample_order_dividing(std::int64_t m, int n, std::mt19937_64& rng);

// The generator feeding trial index i under master seed s; exposed so
// tests can reproduce single trials.
std::mt19937_64 trial_rng(std::uint64_t seed, std::int64_t trial_index);

} // namespace bsgrowth::permgrp

#endif // BSGROWTH_MONTECARLO_HPP
