#ifndef BSGROWTH_CLI_RUN_CONFIG_HPP
#define BSGROWTH_CLI_RUN_CONFIG_HPP

#include <cstdint>
#include <string>

namespace bsgrowth::cli {

enum class Command { Sequence, Compare, Diagnostics, MonteCarlo };

enum class GroupChoice { BaumslagSolitar, FreeProduct, FreeRankOne, ZInvK };

// Sequence/compare value generators. Closed stands for the per-group
// closed forms (index counts of the rank-one free group and of the
// k-inverted integers).
enum class MethodChoice {
  Gelman,
  Semidirect,
  Hall,
  Oracle,
  Asymptotic,
  Census,
  Bound,
  Closed,
};

enum class KindChoice { All, Maximal, Trans, Prim, Hom };

enum class Format { Csv, Json };

struct RunConfig {
  Command command = Command::Sequence;
  GroupChoice group = GroupChoice::FreeRankOne;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t m = 0;
  std::int64_t k = 0;
  bool method_set = false;
  MethodChoice method = MethodChoice::Closed;
  MethodChoice method_b = MethodChoice::Closed;  // compare only
  KindChoice kind = KindChoice::All;
  std::int64_t n_min = 1;
  std::int64_t n_max = 1;
  std::string grid;          // diagnostics: comma list of n values
  std::string check = "all"; // diagnostics selector
  Format format = Format::Csv;
  std::uint64_t seed = 0;
  std::int64_t trials = 500;
  int threads = 1;
};

// "5" -> [5,5]; "1..10" -> [1,10]. Throws std::invalid_argument on
// malformed input or min > max or min < 1.
void parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi);

MethodChoice parse_method(const std::string& name);
std::string method_name(MethodChoice m);

} // namespace bsgrowth::cli

#endif // BSGROWTH_CLI_RUN_CONFIG_HPP
