#ifndef BSGROWTH_BS_PARAMS_HPP
#define BSGROWTH_BS_PARAMS_HPP

#include <cstdint>

namespace bsgrowth {

// Validated parameters of the one-relator group with relation
// y^{-1} x^a y = x^b. The derived fields expose the structure used
// everywhere downstream: m = gcd(|a|,|b|), a = u*m, b = v*m with
// gcd(|u|,|v|) = 1, and the radical of |u*v|.
struct BSParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m = 0;       // gcd(|a|, |b|), always >= 1
  std::int64_t u = 0;       // a / m
  std::int64_t v = 0;       // b / m
  std::int64_t rad_uv = 0;  // radical(|u * v|)

  bool coprime() const { return m == 1; }
};

// Rejects a = 0 or b = 0.
BSParams normalize(std::int64_t a, std::int64_t b);

} // namespace bsgrowth

#endif // BSGROWTH_BS_PARAMS_HPP
