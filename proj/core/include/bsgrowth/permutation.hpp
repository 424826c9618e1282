#ifndef BSGROWTH_PERMUTATION_HPP
#define BSGROWTH_PERMUTATION_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace bsgrowth {

// A bijection of {0, ..., n-1} in one-line notation. Value type;
// construction validates bijectivity.
class Permutation {
public:
  // identity on n points; n >= 1
  explicit Permutation(int degree);
  // one-line notation; throws std::invalid_argument unless a bijection
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree) { return Permutation(degree); }
  // single cycle (points[0] points[1] ... ) on `degree` points
  static Permutation from_cycle(int degree, const std::vector<int>& points);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  // composition: (*this).then(next) maps i to next(this(i))
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  // k-th power; negative k uses the inverse
  Permutation power(std::int64_t k) const;
  // tau^{-1} . sigma . tau in the then-convention:
  // i -> tau(sigma(tau^{-1}(i)))
  Permutation conjugated_by(const Permutation& tau) const;

  // multiset of cycle lengths, ascending
  std::vector<int> cycle_type() const;
  // cycles as point lists, each starting at its least point, ordered by
  // that least point; includes fixed points as 1-cycles
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator!=(const Permutation& o) const { return images_ != o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  std::vector<int> images_;
};

// number of points i with p(i) = i
int fix_count(const Permutation& p);

std::ostream& operator<<(std::ostream& os, const Permutation& p);

} // namespace bsgrowth

#endif // BSGROWTH_PERMUTATION_HPP
