#include "bsgrowth/permgrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <thread>

#include "bsgrowth/errors.hpp"

namespace bsgrowth::permgrp {

namespace {

void require_degree(const std::vector<Permutation>& gens, int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  for (const Permutation& g : gens)
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
}

} // namespace

std::vector<std::vector<int>> orbits(const std::vector<Permutation>& gens, int degree) {
  require_degree(gens, degree);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  std::vector<std::vector<int>> parts;
  for (int start = 0; start < degree; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> block{start};
    seen[static_cast<std::size_t>(start)] = true;
    for (std::size_t head = 0; head < block.size(); ++head) {
      for (const Permutation& g : gens) {
        int y = g(block[head]);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = true;
          block.push_back(y);
        }
      }
    }
    std::sort(block.begin(), block.end());
    parts.push_back(std::move(block));
  }
  return parts;
}

bool is_transitive(const std::vector<Permutation>& gens, int degree) {
  return orbits(gens, degree).size() == 1;
}

namespace {

// union-find with path halving
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  // returns the representative that got absorbed, or -1 if already joined
  int unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return -1;
    parent[static_cast<std::size_t>(ry)] = rx;
    return ry;
  }
};

} // namespace

std::vector<int> minimal_block(const std::vector<Permutation>& gens, int degree,
                               int a, int b) {
  require_degree(gens, degree);
  if (a < 0 || a >= degree || b < 0 || b >= degree || a == b)
    throw std::invalid_argument("minimal_block: need two distinct points in range");
  UnionFind classes(degree);
  std::vector<int> queue;
  classes.unite(a, b);
  queue.push_back(b);
  while (!queue.empty()) {
    int gamma = queue.back();
    queue.pop_back();
    int delta = classes.find(gamma);
    for (const Permutation& g : gens) {
      int absorbed = classes.unite(g(gamma), g(delta));
      if (absorbed >= 0) queue.push_back(absorbed);
    }
  }
  std::vector<int> block;
  int rep = classes.find(a);
  for (int x = 0; x < degree; ++x)
    if (classes.find(x) == rep) block.push_back(x);
  return block;
}

bool is_primitive(const std::vector<Permutation>& gens, int degree) {
  if (degree < 2) throw std::invalid_argument("is_primitive: degree must be >= 2");
  if (!is_transitive(gens, degree))
    throw std::invalid_argument("is_primitive: group is not transitive");
  for (int i = 1; i < degree; ++i)
    if (static_cast<int>(minimal_block(gens, degree, 0, i).size()) < degree)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// stabilizer chain

namespace {

class StabilizerChain {
public:
  StabilizerChain(std::vector<Permutation> gens, int degree) : degree_(degree) {
    for (Permutation& g : gens)
      if (!g.is_identity()) insert(0, std::move(g));
    // sweep until every level passes its Schreier-generator check
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t l = 0; l < levels_.size(); ++l)
        if (close_level(l)) dirty = true;
    }
  }

  BigInt order() const {
    BigInt total = 1;
    for (const Level& level : levels_) total *= static_cast<long>(level.orbit.size());
    return total;
  }

private:
  struct Level {
    int base = 0;
    // generators first met at this level; the group at level l is
    // generated by the own_gens of ALL levels >= l
    std::vector<Permutation> own_gens;
    std::vector<int> orbit;
    // transversal[p] maps base to p for p in the orbit
    std::vector<std::optional<Permutation>> transversal;
  };

  int degree_;
  std::vector<Level> levels_;

  static int least_moved_point(const Permutation& g) {
    for (int i = 0; i < g.degree(); ++i)
      if (g(i) != i) return i;
    return -1;
  }

  // every generator of the level-l group: own_gens of levels l..end
  // (a deeper generator fixes this base point but can still extend the
  // orbit through other points)
  std::vector<const Permutation*> level_generators(std::size_t l) const {
    std::vector<const Permutation*> gens;
    for (std::size_t j = l; j < levels_.size(); ++j)
      for (const Permutation& g : levels_[j].own_gens) gens.push_back(&g);
    return gens;
  }

  void insert(std::size_t level, Permutation g) {
    if (level == levels_.size()) {
      Level fresh;
      fresh.base = least_moved_point(g);
      levels_.push_back(std::move(fresh));
    }
    levels_[level].own_gens.push_back(std::move(g));
    rebuild_orbit(level);
  }

  void rebuild_orbit(std::size_t l) {
    Level& level = levels_[l];
    const std::vector<const Permutation*> gens = level_generators(l);
    level.orbit.clear();
    level.transversal.assign(static_cast<std::size_t>(degree_), std::nullopt);
    level.orbit.push_back(level.base);
    level.transversal[static_cast<std::size_t>(level.base)] = Permutation::identity(degree_);
    for (std::size_t head = 0; head < level.orbit.size(); ++head) {
      int p = level.orbit[head];
      for (const Permutation* s : gens) {
        int q = (*s)(p);
        if (!level.transversal[static_cast<std::size_t>(q)]) {
          level.transversal[static_cast<std::size_t>(q)] =
              level.transversal[static_cast<std::size_t>(p)]->then(*s);
          level.orbit.push_back(q);
        }
      }
    }
  }

  // residue of sifting h through levels >= from; second member is the
  // level at which sifting stopped
  std::pair<Permutation, std::size_t> sift(Permutation h, std::size_t from) const {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      if (h.is_identity()) return {std::move(h), l};
      const Level& level = levels_[l];
      int p = h(level.base);
      const auto& rep = level.transversal[static_cast<std::size_t>(p)];
      if (!rep) return {std::move(h), l};
      h = h.then(rep->inverse());
    }
    return {std::move(h), levels_.size()};
  }

  // verify Schreier generators of level l; true if the chain changed
  bool close_level(std::size_t l) {
    bool changed = false;
    rebuild_orbit(l);
    for (std::size_t oi = 0; oi < levels_[l].orbit.size(); ++oi) {
      // indices into a freshly gathered list each round: an insertion at
      // a deeper level may reallocate levels_
      for (std::size_t si = 0; si < level_generators(l).size(); ++si) {
        const Level& level = levels_[l];
        const int p = level.orbit[oi];
        const Permutation s = *level_generators(l)[si];
        const Permutation& u_p = *level.transversal[static_cast<std::size_t>(p)];
        const auto& u_sp_opt = level.transversal[static_cast<std::size_t>(s(p))];
        if (!u_sp_opt) {
          // the orbit grew stale mid-verification; redo this level
          rebuild_orbit(l);
          return true;
        }
        Permutation schreier = u_p.then(s).then(u_sp_opt->inverse());
        auto [residue, stuck] = sift(std::move(schreier), l + 1);
        if (!residue.is_identity()) {
          insert(stuck, std::move(residue));
          changed = true;
        }
      }
    }
    return changed;
  }
};

} // namespace

BigInt group_order(const std::vector<Permutation>& gens, int degree) {
  require_degree(gens, degree);
  return StabilizerChain(gens, degree).order();
}

bool is_alt_or_sym(const std::vector<Permutation>& gens, int degree) {
  if (degree < 3) throw std::invalid_argument("is_alt_or_sym: degree must be >= 3");
  const BigInt order = group_order(gens, degree);
  const BigInt full = numth::factorial(degree);
  return order == full || order * 2 == full;
}

// ---------------------------------------------------------------------------
// order-dividing enumeration

namespace {

struct OrderDividingEnum {
  numth::DivisorSet cycle_lengths;
  int degree;
  const std::function<void(const Permutation&)>* visit;
  std::vector<int> images;
  std::vector<bool> used;

  void run() {
    images.assign(static_cast<std::size_t>(degree), -1);
    used.assign(static_cast<std::size_t>(degree), false);
    place(0);
  }

  void place(int from) {
    int anchor = -1;
    for (int i = from; i < degree; ++i)
      if (!used[static_cast<std::size_t>(i)]) {
        anchor = i;
        break;
      }
    if (anchor < 0) {
      (*visit)(Permutation(images));
      return;
    }
    used[static_cast<std::size_t>(anchor)] = true;
    for (std::int64_t len : cycle_lengths) {
      if (len > degree - anchor) break;  // not enough points remain
      choose_rest(anchor, static_cast<int>(len));
    }
    used[static_cast<std::size_t>(anchor)] = false;
  }

  // extend the cycle anchored at `anchor` with an ordered choice of
  // len-1 unused points
  void choose_rest(int anchor, int len) {
    std::vector<int> cycle{anchor};
    extend_cycle(anchor, len, cycle);
  }

  void extend_cycle(int anchor, int len, std::vector<int>& cycle) {
    if (static_cast<int>(cycle.size()) == len) {
      for (int i = 0; i < len; ++i)
        images[static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)])] =
            cycle[static_cast<std::size_t>((i + 1) % len)];
      place(anchor + 1);
      return;
    }
    for (int candidate = anchor + 1; candidate < degree; ++candidate) {
      if (used[static_cast<std::size_t>(candidate)]) continue;
      used[static_cast<std::size_t>(candidate)] = true;
      cycle.push_back(candidate);
      extend_cycle(anchor, len, cycle);
      cycle.pop_back();
      used[static_cast<std::size_t>(candidate)] = false;
    }
  }
};

} // namespace

void for_each_order_dividing(std::int64_t m, int degree,
                             const std::function<void(const Permutation&)>& visit) {
  if (m < 1) throw std::invalid_argument("for_each_order_dividing: m must be >= 1");
  if (degree < 1) throw std::invalid_argument("for_each_order_dividing: degree must be >= 1");
  OrderDividingEnum e;
  e.cycle_lengths = numth::divisors(m);
  e.degree = degree;
  e.visit = &visit;
  e.run();
}

std::vector<Permutation> enumerate_order_dividing(std::int64_t m, int degree) {
  std::vector<Permutation> out;
  for_each_order_dividing(m, degree, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// conjugator solutions

namespace {

// cycles of p grouped by length, each cycle in traversal order
std::map<int, std::vector<std::vector<int>>> cycles_by_length(const Permutation& p) {
  std::map<int, std::vector<std::vector<int>>> grouped;
  for (auto& c : p.cycles()) grouped[static_cast<int>(c.size())].push_back(std::move(c));
  return grouped;
}

// tau defined by sending source cycles onto target cycles pointwise:
// source[i][j] -> target[i][(j + rot[i]) % len]
class CycleMatcher {
public:
  CycleMatcher(const Permutation& source, const Permutation& target)
      : degree_(source.degree()),
        source_(cycles_by_length(source)),
        target_(cycles_by_length(target)) {}

  bool compatible() const {
    if (source_.size() != target_.size()) return false;
    for (const auto& [len, cycles] : source_) {
      auto it = target_.find(len);
      if (it == target_.end() || it->second.size() != cycles.size()) return false;
    }
    return true;
  }

  // every relabeling tau with tau-relabel(source) == target
  void for_each(const std::function<void(const Permutation&)>& visit) const {
    std::vector<int> images(static_cast<std::size_t>(degree_), -1);
    emit(source_.begin(), images, visit);
  }

private:
  using Grouped = std::map<int, std::vector<std::vector<int>>>;
  int degree_;
  Grouped source_;
  Grouped target_;

  void emit(Grouped::const_iterator it, std::vector<int>& images,
            const std::function<void(const Permutation&)>& visit) const {
    if (it == source_.end()) {
      visit(Permutation(images));
      return;
    }
    const int len = it->first;
    const auto& src = it->second;
    const auto& dst = target_.at(len);
    const std::size_t k = src.size();
    std::vector<std::size_t> assign(k);
    std::iota(assign.begin(), assign.end(), std::size_t{0});
    // every assignment of source cycles to target cycles of this length,
    // with every rotation of each target cycle
    do {
      std::vector<int> rot(k, 0);
      while (true) {
        for (std::size_t i = 0; i < k; ++i) {
          const auto& a = src[i];
          const auto& b = dst[assign[i]];
          for (std::size_t j = 0; j < a.size(); ++j)
            images[static_cast<std::size_t>(a[j])] =
                b[(j + static_cast<std::size_t>(rot[i])) % b.size()];
        }
        auto next = it;
        emit(++next, images, visit);
        // odometer over rotations
        std::size_t pos = 0;
        while (pos < k && ++rot[pos] == len) rot[pos++] = 0;
        if (pos == k) break;
      }
    } while (std::next_permutation(assign.begin(), assign.end()));
  }
};

} // namespace

void for_each_conjugator(const Permutation& sigma, std::int64_t a, std::int64_t b,
                         const std::function<void(const Permutation&)>& visit) {
  const Permutation pa = sigma.power(a);
  const Permutation pb = sigma.power(b);
  CycleMatcher matcher(pa, pb);
  if (!matcher.compatible()) return;
  matcher.for_each(visit);
}

std::vector<Permutation> conjugator_solutions(const Permutation& sigma,
                                              std::int64_t a, std::int64_t b) {
  std::vector<Permutation> out;
  for_each_conjugator(sigma, a, b, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

// ---------------------------------------------------------------------------
// oracle counts

RepClass classify_pair(Permutation x, Permutation y, std::int64_t a, std::int64_t b) {
  if (x.degree() != y.degree())
    throw std::invalid_argument("classify_pair: degree mismatch");
  const bool satisfies = x.power(a).conjugated_by(y) == x.power(b);
  bool transitive = false;
  bool primitive = false;
  if (satisfies) {
    const int degree = x.degree();
    const std::vector<Permutation> gens{x, y};
    transitive = is_transitive(gens, degree);
    primitive = transitive && degree >= 2 && is_primitive(gens, degree);
  }
  return RepClass{std::move(x), std::move(y), satisfies, transitive, primitive};
}

void OracleCounts::validate() const {
  if (!(primitive <= transitive && transitive <= total))
    throw ConsistencyError("OracleCounts: counts are not nested");
  const BigInt fact = numth::factorial(n - 1);
  if (transitive % fact != 0 || primitive % fact != 0)
    throw ConsistencyError("OracleCounts: counts not divisible by (n-1)!");
  if (subgroups * fact != transitive || maximal * fact != primitive)
    throw ConsistencyError("OracleCounts: converted counts are inconsistent");
}

namespace {

struct PairTally {
  std::int64_t total = 0;
  std::int64_t transitive = 0;
  std::int64_t primitive = 0;
};

// classify the pair (x, y) at the given degree into the tally
void tally_pair(const Permutation& x, const Permutation& y, int degree, PairTally& t) {
  ++t.total;
  const std::vector<Permutation> gens{x, y};
  if (!is_transitive(gens, degree)) return;
  ++t.transitive;
  // degree-1 representations are transitive but carry no maximal
  // subgroup; report nothing primitive there
  if (degree >= 2 && is_primitive(gens, degree)) ++t.primitive;
}

OracleCounts finalize(int n, const PairTally& t) {
  OracleCounts c;
  c.n = n;
  c.total = t.total;
  c.transitive = t.transitive;
  c.primitive = t.primitive;
  const BigInt fact = numth::factorial(n - 1);
  BigInt q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.transitive.get_mpz_t(), fact.get_mpz_t());
  if (r != 0)
    throw ConsistencyError("oracle: transitive count not divisible by (n-1)!");
  c.subgroups = q;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), c.primitive.get_mpz_t(), fact.get_mpz_t());
  if (r != 0)
    throw ConsistencyError("oracle: primitive count not divisible by (n-1)!");
  c.maximal = q;
  c.validate();
  return c;
}

std::vector<Permutation> all_permutations(int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

// split [0, size) into roughly equal chunks and tally them in parallel;
// totals are sums, so the partition cannot affect the result
PairTally parallel_tally(std::size_t size, int threads,
                         const std::function<void(std::size_t, PairTally&)>& work) {
  const int workers = std::max(1, std::min<int>(threads, static_cast<int>(size ? size : 1)));
  std::vector<PairTally> parts(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::size_t lo = size * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
    const std::size_t hi =
        size * (static_cast<std::size_t>(w) + 1) / static_cast<std::size_t>(workers);
    pool.emplace_back([&, lo, hi, w] {
      for (std::size_t i = lo; i < hi; ++i) work(i, parts[static_cast<std::size_t>(w)]);
    });
  }
  for (std::thread& th : pool) th.join();
  PairTally sum;
  for (const PairTally& p : parts) {
    sum.total += p.total;
    sum.transitive += p.transitive;
    sum.primitive += p.primitive;
  }
  return sum;
}

} // namespace

OracleCounts oracle_counts(const BSParams& params, int n, int threads) {
  if (n < 1) throw std::invalid_argument("oracle_counts: n must be >= 1");
  const std::vector<Permutation> xs = all_permutations(n);
  PairTally tally = parallel_tally(
      xs.size(), threads, [&](std::size_t i, PairTally& t) {
        const Permutation& x = xs[i];
        for_each_conjugator(x, params.a, params.b,
                            [&](const Permutation& y) { tally_pair(x, y, n, t); });
      });
  return finalize(n, tally);
}

OracleCounts oracle_free_product(std::int64_t m, int n, int threads) {
  if (m < 1) throw std::invalid_argument("oracle_free_product: m must be >= 1");
  if (n < 1) throw std::invalid_argument("oracle_free_product: n must be >= 1");
  const std::vector<Permutation> xs = enumerate_order_dividing(m, n);
  const std::vector<Permutation> ys = all_permutations(n);
  PairTally tally = parallel_tally(
      xs.size(), threads, [&](std::size_t i, PairTally& t) {
        const Permutation& x = xs[i];
        for (const Permutation& y : ys) tally_pair(x, y, n, t);
      });
  return finalize(n, tally);
}

} // namespace bsgrowth::permgrp
