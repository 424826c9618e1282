#include "bsgrowth/permutation.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace bsgrowth {

Permutation::Permutation(int degree) {
  if (degree < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  images_.resize(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images_[static_cast<std::size_t>(i)] = i;
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = degree();
  if (n < 1) throw std::invalid_argument("Permutation: degree must be >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::from_cycle(int degree, const std::vector<int>& points) {
  Permutation p(degree);
  if (points.empty()) return p;
  for (std::size_t i = 0; i < points.size(); ++i) {
    int from = points[i];
    int to = points[(i + 1) % points.size()];
    if (from < 0 || from >= degree || to < 0 || to >= degree)
      throw std::invalid_argument("Permutation::from_cycle: point out of range");
    p.images_[static_cast<std::size_t>(from)] = to;
  }
  // reject repeated points (image would silently stop being a bijection)
  return Permutation(p.images_);
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree())
    throw std::invalid_argument("Permutation::then: degree mismatch");
  std::vector<int> composed(images_.size());
  for (int i = 0; i < degree(); ++i)
    composed[static_cast<std::size_t>(i)] = next((*this)(i));
  Permutation p(1);
  p.images_ = std::move(composed);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[static_cast<std::size_t>((*this)(i))] = i;
  Permutation p(1);
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::power(std::int64_t k) const {
  const Permutation base = (k < 0) ? inverse() : *this;
  std::int64_t e = (k < 0) ? -k : k;
  // binary powering; exponents here are tiny, but cycles make this exact
  // for any 64-bit k
  Permutation acc = Permutation::identity(degree());
  Permutation sq = base;
  while (e > 0) {
    if (e & 1) acc = acc.then(sq);
    sq = sq.then(sq);
    e >>= 1;
  }
  return acc;
}

Permutation Permutation::conjugated_by(const Permutation& tau) const {
  return tau.inverse().then(*this).then(tau);
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  for (const auto& c : cycles()) lengths.push_back(static_cast<int>(c.size()));
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
      x = (*this)(x);
    } while (x != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

int fix_count(const Permutation& p) {
  int count = 0;
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) == i) ++count;
  return count;
}

std::ostream& operator<<(std::ostream& os, const Permutation& p) {
  os << '[';
  for (int i = 0; i < p.degree(); ++i) {
    if (i) os << ' ';
    os << p(i);
  }
  return os << ']';
}

} // namespace bsgrowth
