#ifndef BSGROWTH_PERMGRP_HPP
#define BSGROWTH_PERMGRP_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "bsgrowth/bs_params.hpp"
#include "bsgrowth/numth.hpp"
#include "bsgrowth/permutation.hpp"

// Brute-force oracle over explicit permutation representations:
// enumerate relation-satisfying generator pairs in Sym(n), classify the
// transitive and primitive ones, and convert to subgroup counts. Nothing
// here is clever on purpose; exactness at small degree is the point.

namespace bsgrowth::permgrp {

// Orbit partition of the group generated by gens; blocks sorted by least
// element, each block ascending. All generators must share one degree.
std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree);

bool is_transitive(const std::vector<Permutation>& gens, int degree);

// Smallest block containing {a, b} under the generated group, via
// union-find refinement.
std::vector<int> minimal_block(const std::vector<Permutation>& gens, int degree,
                               int a, int b);

// True iff the generated group is transitive with no nontrivial proper
// block system. Degree-2 transitive groups are primitive. Throws
// std::invalid_argument on a non-transitive group or degree < 2.
bool is_primitive(const std::vector<Permutation>& gens, int degree);

// Exact order of the generated subgroup via a stabilizer chain with
// sifted Schreier generators. Practical degree bound documented at 20.
BigInt group_order(const std::vector<Permutation>& gens, int degree);

// True iff the generated group is Alt(degree) or Sym(degree); degree >= 3.
bool is_alt_or_sym(const std::vector<Permutation>& gens, int degree);

// Visits each permutation of order dividing m exactly once, built cycle
// by cycle at the least unplaced point. Full enumeration is practical up
// to degree ~12.
void for_each_order_dividing(std::int64_t m, int degree,
                             const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> enumerate_order_dividing(std::int64_t m, int degree);

// Visits every tau with  tau^{-1} sigma^a tau = sigma^b  (the relation
// as a condition on generator images). Empty when sigma^a and sigma^b
// have different cycle types; otherwise one matching solution composed
// with each centralizer element of sigma^a, enumerated through the cycle
// structure rather than by scanning Sym(n).
void for_each_conjugator(const Permutation& sigma, std::int64_t a, std::int64_t b,
                         const std::function<void(const Permutation&)>& visit);
std::vector<Permutation> conjugator_solutions(const Permutation& sigma,
                                              std::int64_t a, std::int64_t b);

// One candidate generator pair together with its classification. The
// flags are plain data; classify_pair recomputes them from the images.
struct RepClass {
  Permutation x_image;
  Permutation y_image;
  bool satisfies_relation = false;
  bool transitive = false;
  bool primitive = false;
};

// Checks the defining relation y^{-1} x^a y = x^b on the pair and, when
// it holds, classifies the generated subgroup. Degree-1 pairs count as
// transitive and never as primitive.
RepClass classify_pair(Permutation x, Permutation y, std::int64_t a, std::int64_t b);

// Exact representation counts at one degree, with the factorial
// conversions to subgroup counts already applied.
struct OracleCounts {
  std::int64_t n = 0;
  BigInt total;       // all relation-satisfying pairs
  BigInt transitive;  // pairs generating a transitive group
  BigInt primitive;   // pairs generating a primitive group
  BigInt subgroups;   // transitive / (n-1)!
  BigInt maximal;     // primitive / (n-1)!

  // primitive <= transitive <= total and both divisibilities; throws
  // ConsistencyError otherwise.
  void validate() const;
};

// Counts for the two-generator relation group: x-image ranges over all
// of Sym(n), y-image over the conjugator solutions. Degree 1 reps count
// as transitive; the maximal count at n = 1 is reported as 0. threads
// partitions the x-image space; totals are independent of the partition.
// Practical bound n <= 7 (documented, not enforced).
OracleCounts oracle_counts(const BSParams& params, int n, int threads = 1);

// Same counts for pairs (x, y) with x^m = identity and y arbitrary.
OracleCounts oracle_free_product(std::int64_t m, int n, int threads = 1);

} // namespace bsgrowth::permgrp

#endif // BSGROWTH_PERMGRP_HPP
