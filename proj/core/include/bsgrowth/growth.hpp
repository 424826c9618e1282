#ifndef BSGROWTH_GROWTH_HPP
#define BSGROWTH_GROWTH_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bsgrowth/bs_params.hpp"
#include "bsgrowth/numth.hpp"

// Exact subgroup-growth sequences: order-dividing permutation counts,
// the transitivity sieve turning hom counts into subgroup counts, the
// two independent closed-form paths for the coprime case, fixed-point
// censuses, and the divisor-sum upper bound for the non-coprime case.

namespace bsgrowth::growth {

enum class SeriesKind {
  AllSubgroups,
  MaximalSubgroups,
  TransitiveReps,
  PrimitiveReps,
  HomCounts,
};

enum class Method { Gelman, Semidirect, Hall, Oracle, ClosedForm };

enum class GroupKind {
  BaumslagSolitar,   // uses params
  FreeProductZmodM,  // uses m
  FreeRankOne,       // the infinite cyclic group
  ZInvK,             // integers with k inverted; uses k
};

struct GroupDescriptor {
  GroupKind kind = GroupKind::FreeRankOne;
  BSParams params;      // BaumslagSolitar
  std::int64_t m = 0;   // FreeProductZmodM
  std::int64_t k = 0;   // ZInvK

  static GroupDescriptor baumslag_solitar(const BSParams& p);
  static GroupDescriptor free_product(std::int64_t m);
  static GroupDescriptor free_rank_one();
  static GroupDescriptor z_inv_k(std::int64_t k);

  std::string label() const;
};

// An indexed sequence of exact counts together with provenance: which
// group, which kind of count, and which method produced it.
struct GrowthSeries {
  SeriesKind kind = SeriesKind::AllSubgroups;
  GroupDescriptor group;
  Method method = Method::ClosedForm;
  std::map<std::int64_t, BigInt> values;

  // Throws ConsistencyError if any value is negative or if an
  // AllSubgroups series carries a value other than 1 at n = 1.
  void validate() const;
};

// --- order-dividing-m counts -------------------------------------------

// Exact number of permutations of n points whose order divides m
// (m = 1 counts only the identity; n = 0 yields 1). Memoizes a full
// prefix per m, so sequential calls with growing n cost one pass total.
BigInt count_order_dividing(std::int64_t m, std::int64_t n);

// The prefix 0..max_n as a vector (no shared cache; pure function).
std::vector<BigInt> order_dividing_counts(std::int64_t m, std::int64_t max_n);

// Count restricted to permutations without fixed points, same indexing.
std::vector<BigInt> fixed_point_free_counts(std::int64_t m, std::int64_t max_n);

// n! times the order-dividing count: the number of pairs (image of the
// torsion generator, image of the free generator), i.e. the hom count of
// the free product with a rank-one free factor. Requires m >= 1, n >= 1.
BigInt hom_count_free_product(std::int64_t m, std::int64_t n);

// --- the transitivity sieve ---------------------------------------------

struct HallResult {
  GrowthSeries transitive;  // t_n
  GrowthSeries subgroups;   // t_n / (n-1)!
};

// Recovers transitive counts t_n from a homomorphism-count sequence via
//   t_n = h_n - sum_{k=1}^{n-1} binomial(n-1, k-1) t_k h_{n-k},  h_0 = 1,
// then subgroup counts as t_n / (n-1)!. hom[n] must hold h_n for
// 1 <= n <= max_n (hom[0] is ignored) with h_1 = 1. Throws
// ConsistencyError if any t_n is negative or any division is inexact;
// both are impossible for genuine hom sequences and indicate an invalid
// input.
HallResult hall_counts(const std::vector<BigInt>& hom, std::int64_t max_n,
                       GroupDescriptor group = GroupDescriptor::free_rank_one());

// Convenience: subgroup-count series of the free product for n in
// 1..max_n, built from hom_count_free_product through hall_counts.
GrowthSeries free_product_subgroup_series(std::int64_t m, std::int64_t max_n);

// --- exact closed forms, coprime case ------------------------------------

// Number of index-n subgroups when gcd(a,b) = 1: the sum of the divisors
// of n that are coprime to |ab|. Rejects params with m > 1.
BigInt gelman_count(const BSParams& params, std::int64_t n);

// 1 if the integers-with-k-inverted group has an index-n subgroup
// (n coprime to k), else 0. Rejects k = 0.
int subgroup_count_z_inv_k(std::int64_t k, std::int64_t n);

// Number of derivations from the infinite cyclic group to Z/dZ,
// independent of the action: exactly d.
BigInt derivation_count_z(std::int64_t d);

// Same count as gelman_count along the independent derivation-sum route:
//   sum over d | n of (index-d subgroup of the kernel) * (derivations).
// Shares no divisor-sum loop with gelman_count; the agreement of the two
// is a cross-check, not a tautology. Rejects m > 1.
BigInt semidirect_count(const BSParams& params, std::int64_t n);

// Maximal-subgroup count in the coprime case, per the closed form:
// p + 1 at primes p not dividing ab, 0 at other primes and at composite
// or trivial index. Rejects m > 1.
BigInt max_count_coprime(const BSParams& params, std::int64_t n);

// --- fixed-point census ---------------------------------------------------

// counts[k] = number of order-dividing-m permutations of n points with
// exactly k fixed points.
struct FixCensus {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::vector<BigInt> counts;  // indices 0..n

  BigInt total() const;
};

// Built as counts[k] = binomial(n,k) * (fixed-point-free count at n-k),
// with the fixed-point-free counts obtained by inclusion-exclusion over
// the full order-dividing counts. Requires m >= 2, n >= 1. Throws
// ConsistencyError if the census total fails to match the full count.
FixCensus fix_census(std::int64_t m, std::int64_t n);

// Fraction of order-dividing-m permutations having at least
// floor(n / ln n) fixed points, computed exactly as a big rational and
// rounded once. Requires m >= 2, n >= 3.
double census_ratio(std::int64_t m, std::int64_t n);
BigRat census_ratio_exact(std::int64_t m, std::int64_t n);

// --- non-coprime upper bound ----------------------------------------------

// Divisor-sum upper bound on the index-n subgroup count for m > 1:
//   sum over d | n, gcd(d, uv) = 1, of a_{n/d}(free product) * d^{2n/d}
// with the derivation factor capped at 3^{2n/3} (the cap is never the
// smaller side for integer d, but the comparison is kept explicit).
// Rejects m = 1.
BigInt shalev_upper_bound(const BSParams& params, std::int64_t n);

// Series form sharing one sieve pass for n in 1..max_n.
GrowthSeries shalev_upper_bound_series(const BSParams& params, std::int64_t max_n);

} // namespace bsgrowth::growth

#endif // BSGROWTH_GROWTH_HPP
