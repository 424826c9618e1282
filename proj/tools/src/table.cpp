#include "table.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace bsgrowth::cli {

Cell Cell::of(BigInt v) {
  Cell c;
  c.kind = Kind::Integer;
  c.integer = std::move(v);
  return c;
}

Cell Cell::ln(double v) {
  Cell c;
  c.kind = Kind::Ln;
  c.real = v;
  return c;
}

Cell Cell::of(double v) {
  Cell c;
  c.kind = Kind::Real;
  c.real = v;
  return c;
}

Cell Cell::of(std::string v) {
  Cell c;
  c.kind = Kind::Text;
  c.text = std::move(v);
  return c;
}

Cell Cell::empty() { return Cell{}; }

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Integer: return c.integer.get_str();
    case Cell::Kind::Ln: return "ln:" + format_double(c.real);
    case Cell::Kind::Real: return format_double(c.real);
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Empty: return "";
  }
  return "";
}

nlohmann::ordered_json json_cell(const Cell& c) {
  switch (c.kind) {
    case Cell::Kind::Integer: return c.integer.get_str();
    case Cell::Kind::Ln: return nlohmann::ordered_json{{"ln", c.real}};
    case Cell::Kind::Real: return c.real;
    case Cell::Kind::Text: return c.text;
    case Cell::Kind::Empty: return nullptr;
  }
  return nullptr;
}

} // namespace

std::string render(const Table& table, Format format) {
  for (const auto& row : table.rows)
    if (row.size() != table.columns.size())
      throw std::logic_error("render: row width does not match header");

  if (format == Format::Csv) {
    std::string out;
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
      if (i) out += ',';
      out += table.columns[i];
    }
    out += '\n';
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) out += ',';
        out += csv_cell(row[i]);
      }
      out += '\n';
    }
    return out;
  }

  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i)
      obj[table.columns[i]] = json_cell(row[i]);
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

} // namespace bsgrowth::cli
