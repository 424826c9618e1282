#ifndef BSGROWTH_ERRORS_HPP
#define BSGROWTH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bsgrowth {

// Raised when a computation produces values that are mathematically
// impossible for valid input (negative transitive counts, inexact
// factorial division, broken census totals). Indicates an upstream bug
// or an invalid input sequence, never a recoverable condition.
class ConsistencyError : public std::runtime_error {
public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace bsgrowth

#endif // BSGROWTH_ERRORS_HPP
