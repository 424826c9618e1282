#ifndef BSGROWTH_CLI_TABLE_HPP
#define BSGROWTH_CLI_TABLE_HPP

#include <string>
#include <vector>

#include <bsgrowth/numth.hpp>

#include "run_config.hpp"

namespace bsgrowth::cli {

// One output cell. Exact counts stay exact (decimal strings on the
// wire); log-space reals keep their ln to avoid overflowing consumers.
struct Cell {
  enum class Kind { Integer, Ln, Real, Text, Empty };

  Kind kind = Kind::Empty;
  BigInt integer;
  double real = 0.0;
  std::string text;

  static Cell of(BigInt v);
  static Cell ln(double v);
  static Cell of(double v);
  static Cell of(std::string v);
  static Cell empty();
};

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

// CSV: header line plus one line per row, LF endings. Ln cells render
// as ln:<value> with round-trip-exact doubles. JSON: array of objects
// with the column names as keys; Ln cells render as {"ln": <value>},
// integers as decimal strings, empties as null.
std::string render(const Table& table, Format format);

} // namespace bsgrowth::cli

#endif // BSGROWTH_CLI_TABLE_HPP
