#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <bsgrowth/errors.hpp>
#include <bsgrowth/growth.hpp>
#include <bsgrowth/permgrp.hpp>
#include <bsgrowth/permutation.hpp>

using namespace bsgrowth;
namespace pg = bsgrowth::permgrp;

namespace {

Permutation cycle(int degree, std::initializer_list<int> points) {
  return Permutation::from_cycle(degree, std::vector<int>(points));
}

std::vector<Permutation> sym_n(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// brute-force scan for the relation solutions, independent of the
// cycle-matching enumerator
std::set<std::vector<int>> conjugator_brute(const Permutation& sigma, std::int64_t a,
                                            std::int64_t b) {
  const Permutation pa = sigma.power(a);
  const Permutation pb = sigma.power(b);
  std::set<std::vector<int>> out;
  for (const Permutation& tau : sym_n(sigma.degree()))
    if (pa.conjugated_by(tau) == pb) out.insert(tau.images());
  return out;
}

BigInt centralizer_order(const Permutation& p) {
  // product over cycle lengths l with k cycles of k! * l^k
  std::map<int, int> count;
  for (int len : p.cycle_type()) ++count[len];
  BigInt order = 1;
  for (const auto& [len, k] : count) {
    order *= numth::factorial(k);
    for (int i = 0; i < k; ++i) order *= len;
  }
  return order;
}

} // namespace

TEST_SUITE("permutation") {

TEST_CASE("construction validates bijectivity") {
  CHECK_NOTHROW(Permutation({1, 0, 2}));
  CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("composition, inverse, powers") {
  const Permutation c = cycle(4, {0, 1, 2, 3});
  CHECK(c.then(c.inverse()).is_identity());
  CHECK(c.power(4).is_identity());
  CHECK(c.power(-1) == c.inverse());
  CHECK(c.power(-3) == c);
  CHECK(c.power(0).is_identity());
  const Permutation t = cycle(4, {0, 1});
  CHECK(t.then(c)(0) == c(t(0)));
  // conjugation relabels cycles
  const Permutation conj = c.conjugated_by(t);
  CHECK(conj == cycle(4, {1, 0, 2, 3}));
}

TEST_CASE("fix count") {
  CHECK(fix_count(Permutation::identity(5)) == 5);
  CHECK(fix_count(cycle(4, {0, 1})) == 2);
  CHECK(fix_count(cycle(4, {0, 1, 2, 3})) == 0);
}

TEST_CASE("cycle type") {
  CHECK(cycle(5, {0, 1, 2}).cycle_type() == std::vector<int>({1, 1, 3}));
  CHECK(Permutation::identity(3).cycle_type() == std::vector<int>({1, 1, 1}));
}

} // TEST_SUITE

TEST_SUITE("permgrp") {

TEST_CASE("orbits") {
  CHECK(pg::orbits({Permutation::identity(3)}, 3) ==
        std::vector<std::vector<int>>{{0}, {1}, {2}});
  CHECK(pg::orbits({cycle(3, {0, 1, 2})}, 3) == std::vector<std::vector<int>>{{0, 1, 2}});
  CHECK(pg::orbits({cycle(3, {0, 1})}, 3) == std::vector<std::vector<int>>{{0, 1}, {2}});
  CHECK_THROWS_AS(pg::orbits({Permutation::identity(3), Permutation::identity(4)}, 3),
                  std::invalid_argument);
}

TEST_CASE("primitivity") {
  // 4-cycle: blocks {0,2},{1,3}
  CHECK_FALSE(pg::is_primitive({cycle(4, {0, 1, 2, 3})}, 4));
  CHECK(pg::is_primitive({cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, 3));
  CHECK(pg::is_primitive({cycle(5, {0, 1, 2, 3, 4})}, 5));
  // degree 2 transitive groups are primitive
  CHECK(pg::is_primitive({cycle(2, {0, 1})}, 2));
  // dihedral on 4 points keeps the diagonal blocks
  CHECK_FALSE(pg::is_primitive({cycle(4, {0, 1, 2, 3}), cycle(4, {0, 2})}, 4));
  // full symmetric group
  CHECK(pg::is_primitive({cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}, 4));
  CHECK_THROWS_AS(pg::is_primitive({cycle(3, {0, 1})}, 3), std::invalid_argument);
}

TEST_CASE("transitive groups of prime degree are primitive") {
  // every cyclic regular action of prime degree, plus a few random pairs
  for (int p : {2, 3, 5, 7}) {
    std::vector<int> shift(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % p;
    CHECK(pg::is_primitive({Permutation(shift)}, p));
  }
  int checked = 0;
  for (const Permutation& x : sym_n(5)) {
    const std::vector<Permutation> gens{x, cycle(5, {0, 1, 2, 3, 4})};
    if (!pg::is_transitive(gens, 5)) continue;
    CHECK(pg::is_primitive(gens, 5));
    ++checked;
  }
  CHECK(checked > 0);
}

TEST_CASE("group order on known groups") {
  CHECK(pg::group_order({cycle(3, {0, 1}), cycle(3, {0, 1, 2})}, 3) == 6);
  CHECK(pg::group_order({Permutation::identity(4)}, 4) == 1);
  CHECK(pg::group_order({cycle(3, {0, 1, 2})}, 3) == 3);
  // symmetric groups via the standard two generators
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> shift(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) shift[static_cast<std::size_t>(i)] = (i + 1) % n;
    CHECK(pg::group_order({cycle(n, {0, 1}), Permutation(shift)}, n) ==
          numth::factorial(n));
  }
  // alternating group on 4 points from two 3-cycles
  CHECK(pg::group_order({cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, 4) == 12);
  // dihedral group of order 2n
  for (int n : {5, 8, 12}) {
    std::vector<int> rot(static_cast<std::size_t>(n)), flip(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      rot[static_cast<std::size_t>(i)] = (i + 1) % n;
      flip[static_cast<std::size_t>(i)] = (n - i) % n;
    }
    CHECK(pg::group_order({Permutation(rot), Permutation(flip)}, n) == 2 * n);
  }
  // intransitive: two commuting transpositions
  CHECK(pg::group_order({cycle(4, {0, 1}), cycle(4, {2, 3})}, 4) == 4);
  // Mathieu group of degree 11, order 7920, from the standard pair
  // (0..10) and (2 6 10 7)(3 9 4 5)
  const Permutation m11a = cycle(11, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  const Permutation m11b = Permutation({0, 1, 6, 9, 5, 3, 10, 2, 8, 4, 7});
  CHECK(pg::group_order({m11a, m11b}, 11) == 7920);
}

TEST_CASE("alternating-or-symmetric recognition") {
  CHECK(pg::is_alt_or_sym({cycle(4, {0, 1}), cycle(4, {0, 1, 2, 3})}, 4));
  CHECK_FALSE(pg::is_alt_or_sym({cycle(4, {0, 1, 2, 3})}, 4));
  CHECK(pg::is_alt_or_sym({cycle(4, {0, 1, 2}), cycle(4, {1, 2, 3})}, 4));
  CHECK_THROWS_AS(pg::is_alt_or_sym({cycle(2, {0, 1})}, 2), std::invalid_argument);
}

TEST_CASE("order-dividing enumeration") {
  CHECK(pg::enumerate_order_dividing(2, 3).size() == 4);
  const auto only_identity = pg::enumerate_order_dividing(1, 5);
  REQUIRE(only_identity.size() == 1);
  CHECK(only_identity[0].is_identity());
  CHECK(pg::enumerate_order_dividing(3, 3).size() == 3);

  for (std::int64_t m = 1; m <= 6; ++m)
    for (int n = 1; n <= 8; ++n) {
      std::set<std::vector<int>> seen;
      pg::for_each_order_dividing(m, n, [&](const Permutation& p) {
        CHECK(p.power(m).is_identity());
        seen.insert(p.images());
      });
      CHECK(BigInt(static_cast<long>(seen.size())) == growth::count_order_dividing(m, n));
    }
}

TEST_CASE("conjugator solutions: examples") {
  // identity: both sides identity, every tau works
  CHECK(pg::conjugator_solutions(Permutation::identity(3), 2, 3).size() == 6);
  // conjugating a 3-cycle to its square: the centralizer has order 3
  const auto three = pg::conjugator_solutions(cycle(3, {0, 1, 2}), 1, 2);
  CHECK(three.size() == 3);
  for (const Permutation& tau : three)
    CHECK(cycle(3, {0, 1, 2}).conjugated_by(tau) == cycle(3, {0, 1, 2}).power(2));
  // sigma^2 = id on two points
  CHECK(pg::conjugator_solutions(cycle(2, {0, 1}), 2, 2).size() == 2);
  // incompatible cycle types: a 3-cycle is never conjugate to the identity
  CHECK(pg::conjugator_solutions(cycle(3, {0, 1, 2}), 1, 3).empty());
}

TEST_CASE("conjugator solutions match the brute-force scan") {
  for (int n = 2; n <= 5; ++n) {
    for (const Permutation& sigma : sym_n(n)) {
      for (const auto& [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{
               {1, 2}, {2, 3}, {2, 2}, {-2, 3}, {2, 4}}) {
        const auto brute = conjugator_brute(sigma, a, b);
        std::set<std::vector<int>> fast;
        pg::for_each_conjugator(sigma, a, b,
                                [&](const Permutation& tau) { fast.insert(tau.images()); });
        REQUIRE(fast == brute);
        if (!brute.empty())
          REQUIRE(BigInt(static_cast<long>(brute.size())) ==
                  centralizer_order(sigma.power(a)));
      }
    }
  }
}

TEST_CASE("pair classification carries recomputable flags") {
  // x = identity forces the relation at (2,3); the 3-cycle y acts
  // transitively and primitively
  const auto good = pg::classify_pair(Permutation::identity(3), cycle(3, {0, 1, 2}), 2, 3);
  CHECK(good.satisfies_relation);
  CHECK(good.transitive);
  CHECK(good.primitive);
  // a 3-cycle x fails y^{-1} x^2 y = x^3 for every y
  const auto bad = pg::classify_pair(cycle(3, {0, 1, 2}), cycle(3, {0, 1}), 2, 3);
  CHECK_FALSE(bad.satisfies_relation);
  CHECK_FALSE(bad.transitive);
  // flags agree with a direct recomputation over a full degree-4 sweep
  for (const Permutation& x : sym_n(4))
    for (const Permutation& y : sym_n(4)) {
      const auto rep = pg::classify_pair(x, y, 2, 4);
      CHECK(rep.satisfies_relation == (x.power(2).conjugated_by(y) == x.power(4)));
      if (rep.satisfies_relation) {
        CHECK(rep.transitive == pg::is_transitive({x, y}, 4));
        if (rep.transitive) CHECK(rep.primitive == pg::is_primitive({x, y}, 4));
      }
    }
}

TEST_CASE("oracle: coprime parameters reproduce the closed form") {
  const BSParams p = normalize(2, 3);
  for (int n = 1; n <= 5; ++n) {
    const pg::OracleCounts c = pg::oracle_counts(p, n);
    CHECK(c.subgroups == growth::gelman_count(p, n));
  }
  CHECK(pg::oracle_counts(p, 5).maximal == 6);
}

TEST_CASE("oracle: equal parameters at degree 2") {
  CHECK(pg::oracle_counts(normalize(2, 2), 2).subgroups == 3);
}

TEST_CASE("oracle: frozen values for gcd 2 parameters") {
  const BSParams p = normalize(2, 4);
  const std::vector<long> expected{1, 3, 10, 23, 76};
  for (int n = 1; n <= 5; ++n) {
    const pg::OracleCounts c = pg::oracle_counts(p, n);
    CHECK(c.subgroups == expected[static_cast<std::size_t>(n - 1)]);
    c.validate();
  }
}

TEST_CASE("oracle: free product matches the transitivity sieve") {
  for (std::int64_t m : {2, 3}) {
    const growth::GrowthSeries hall = growth::free_product_subgroup_series(m, 5);
    for (int n = 1; n <= 5; ++n) {
      const pg::OracleCounts c = pg::oracle_free_product(m, n);
      CHECK(c.subgroups == hall.values.at(n));
      CHECK(c.total == growth::hom_count_free_product(m, n));
    }
  }
  CHECK(pg::oracle_free_product(2, 1).subgroups == 1);
  CHECK(pg::oracle_free_product(2, 2).subgroups == 3);
  CHECK(pg::oracle_free_product(2, 3).subgroups == 7);
}

TEST_CASE("oracle: counts are nested and divisible") {
  for (int n = 1; n <= 5; ++n) {
    const pg::OracleCounts c = pg::oracle_counts(normalize(2, 4), n);
    CHECK(c.primitive <= c.transitive);
    CHECK(c.transitive <= c.total);
    CHECK(c.transitive % numth::factorial(n - 1) == 0);
    CHECK(c.primitive % numth::factorial(n - 1) == 0);
    CHECK(c.maximal <= c.subgroups);
  }
}

TEST_CASE("oracle: no maximal subgroups at composite index for coprime parameters") {
  for (const auto& [a, b] :
       std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 3}, {3, 4}}) {
    const BSParams p = normalize(a, b);
    CHECK(pg::oracle_counts(p, 4).maximal == 0);
    CHECK(pg::oracle_counts(p, 6).maximal == 0);
  }
}

TEST_CASE("oracle: free-product quotient gives a lower bound") {
  const BSParams p = normalize(2, 4);
  for (int n = 1; n <= 5; ++n)
    CHECK(pg::oracle_counts(p, n).subgroups >= pg::oracle_free_product(2, n).subgroups);
}

TEST_CASE("oracle: totals independent of the thread partition") {
  const pg::OracleCounts one = pg::oracle_counts(normalize(2, 3), 5, 1);
  const pg::OracleCounts three = pg::oracle_counts(normalize(2, 3), 5, 3);
  CHECK(one.total == three.total);
  CHECK(one.transitive == three.transitive);
  CHECK(one.primitive == three.primitive);
  const pg::OracleCounts fp1 = pg::oracle_free_product(2, 5, 1);
  const pg::OracleCounts fp4 = pg::oracle_free_product(2, 5, 4);
  CHECK(fp1.transitive == fp4.transitive);
  CHECK(fp1.primitive == fp4.primitive);
}

TEST_CASE("oracle: negative exponents use inverse powers") {
  // same counts as the hand-checked (-2, 3) run
  const BSParams p = normalize(-2, 3);
  const std::vector<long> expected{1, 1, 1, 1, 6};
  for (int n = 1; n <= 5; ++n)
    CHECK(pg::oracle_counts(p, n).subgroups == expected[static_cast<std::size_t>(n - 1)]);
}

} // TEST_SUITE
