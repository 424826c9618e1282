#include "run_config.hpp"

#include <charconv>
#include <stdexcept>

namespace bsgrowth::cli {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid integer '" + std::string(text) + "'");
  return value;
}

} // namespace

void parse_range(const std::string& text, std::int64_t& lo, std::int64_t& hi) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    lo = hi = parse_int(text);
  } else {
    lo = parse_int(std::string_view(text).substr(0, dots));
    hi = parse_int(std::string_view(text).substr(dots + 2));
  }
  if (lo < 1 || hi < lo)
    throw std::invalid_argument("invalid index range '" + text + "' (need 1 <= min <= max)");
}

MethodChoice parse_method(const std::string& name) {
  if (name == "gelman") return MethodChoice::Gelman;
  if (name == "semidirect") return MethodChoice::Semidirect;
  if (name == "hall") return MethodChoice::Hall;
  if (name == "oracle") return MethodChoice::Oracle;
  if (name == "asymptotic") return MethodChoice::Asymptotic;
  if (name == "census") return MethodChoice::Census;
  if (name == "bound") return MethodChoice::Bound;
  if (name == "closed") return MethodChoice::Closed;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string method_name(MethodChoice m) {
  switch (m) {
    case MethodChoice::Gelman: return "gelman";
    case MethodChoice::Semidirect: return "semidirect";
    case MethodChoice::Hall: return "hall";
    case MethodChoice::Oracle: return "oracle";
    case MethodChoice::Asymptotic: return "asymptotic";
    case MethodChoice::Census: return "census";
    case MethodChoice::Bound: return "bound";
    case MethodChoice::Closed: return "closed";
  }
  return "?";
}

} // namespace bsgrowth::cli
