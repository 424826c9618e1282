#include "commands.hpp"

#include <charconv>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>

#include <json.hpp>

#include <bsgrowth/asymptotic.hpp>
#include <bsgrowth/growth.hpp>
#include <bsgrowth/montecarlo.hpp>
#include <bsgrowth/permgrp.hpp>

namespace bsgrowth::cli {

namespace {

constexpr std::int64_t kOracleDegreeCap = 7;

[[noreturn]] void reject(const std::string& message) {
  throw std::invalid_argument(message);
}

BSParams require_bs(const RunConfig& c) {
  if (c.a == 0 || c.b == 0) reject("group bs requires nonzero --a and --b");
  return normalize(c.a, c.b);
}

std::int64_t require_m(const RunConfig& c) {
  if (c.m < 1) reject("group freeproduct requires --m >= 1");
  return c.m;
}

MethodChoice effective_method(const RunConfig& c) {
  if (c.method_set) return c.method;
  switch (c.group) {
    case GroupChoice::BaumslagSolitar: {
      const BSParams p = require_bs(c);
      if (!p.coprime())
        reject("no default method for gcd(a,b) > 1; choose oracle, bound or asymptotic");
      return MethodChoice::Gelman;
    }
    case GroupChoice::FreeProduct: return MethodChoice::Hall;
    case GroupChoice::FreeRankOne:
    case GroupChoice::ZInvK: return MethodChoice::Closed;
  }
  return MethodChoice::Closed;
}

// A sequence column: either exact big integers or log-space reals.
struct SeriesProvider {
  bool exact = true;
  asymptotic::MainTerm term = asymptotic::MainTerm::SubgroupGrowth;
  std::int64_t main_term_m = 0;  // for ratio columns against this series
  std::function<Cell(std::int64_t)> cell;
  std::function<BigInt(std::int64_t)> value;  // exact providers only
};

SeriesProvider exact_provider(std::function<BigInt(std::int64_t)> f) {
  SeriesProvider p;
  p.exact = true;
  p.value = std::move(f);
  p.cell = [fn = p.value](std::int64_t n) { return Cell::of(fn(n)); };
  return p;
}

SeriesProvider oracle_provider(const RunConfig& config) {
  if (config.n_max > kOracleDegreeCap)
    reject("oracle method is capped at degree " + std::to_string(kOracleDegreeCap));
  const KindChoice kind = config.kind;
  const int threads = config.threads;
  std::function<permgrp::OracleCounts(std::int64_t)> counts;
  if (config.group == GroupChoice::BaumslagSolitar) {
    const BSParams params = require_bs(config);
    counts = [params, threads](std::int64_t n) {
      return permgrp::oracle_counts(params, static_cast<int>(n), threads);
    };
  } else if (config.group == GroupChoice::FreeProduct) {
    const std::int64_t m = require_m(config);
    counts = [m, threads](std::int64_t n) {
      return permgrp::oracle_free_product(m, static_cast<int>(n), threads);
    };
  } else {
    reject("oracle method applies to groups bs and freeproduct");
  }
  return exact_provider([counts, kind](std::int64_t n) {
    const permgrp::OracleCounts c = counts(n);
    switch (kind) {
      case KindChoice::All: return c.subgroups;
      case KindChoice::Maximal: return c.maximal;
      case KindChoice::Trans: return c.transitive;
      case KindChoice::Prim: return c.primitive;
      case KindChoice::Hom: return c.total;
    }
    return c.subgroups;
  });
}

SeriesProvider hall_provider(const RunConfig& config) {
  const std::int64_t m = require_m(config);
  if (config.kind == KindChoice::Hom)
    return exact_provider(
        [m](std::int64_t n) { return growth::hom_count_free_product(m, n); });
  if (config.kind != KindChoice::All && config.kind != KindChoice::Trans)
    reject("method hall provides --kind all, trans or hom");
  // one sieve pass shared by every row
  auto table = std::make_shared<std::map<std::int64_t, BigInt>>();
  std::vector<BigInt> hom(static_cast<std::size_t>(config.n_max) + 1);
  hom[0] = 1;
  BigInt fact = 1;
  const std::vector<BigInt> counts = growth::order_dividing_counts(m, config.n_max);
  for (std::int64_t n = 1; n <= config.n_max; ++n) {
    fact *= n;
    hom[static_cast<std::size_t>(n)] = fact * counts[static_cast<std::size_t>(n)];
  }
  growth::HallResult hall =
      growth::hall_counts(hom, config.n_max, growth::GroupDescriptor::free_product(m));
  *table = (config.kind == KindChoice::All) ? std::move(hall.subgroups.values)
                                            : std::move(hall.transitive.values);
  return exact_provider([table](std::int64_t n) { return table->at(n); });
}

SeriesProvider asymptotic_provider(const RunConfig& config) {
  std::int64_t m = 0;
  if (config.group == GroupChoice::FreeProduct) {
    m = require_m(config);
  } else if (config.group == GroupChoice::BaumslagSolitar) {
    const BSParams params = require_bs(config);
    if (params.coprime())
      reject("asymptotic main term applies to gcd(a,b) > 1; the coprime case is exact");
    m = params.m;
  } else {
    reject("asymptotic method applies to groups bs and freeproduct");
  }
  if (m < 2) reject("asymptotic method requires m >= 2");
  asymptotic::MainTerm term;
  switch (config.kind) {
    case KindChoice::All:
    case KindChoice::Maximal:
      term = asymptotic::MainTerm::SubgroupGrowth;
      break;
    case KindChoice::Hom:
      term = asymptotic::MainTerm::HomCount;
      break;
    default:
      reject("asymptotic method provides --kind all, maximal or hom");
  }
  SeriesProvider p;
  p.exact = false;
  p.term = term;
  p.main_term_m = m;
  p.cell = [m, term](std::int64_t n) {
    const double x = static_cast<double>(n);
    return Cell::ln(term == asymptotic::MainTerm::HomCount
                        ? asymptotic::log_hom_main_term(m, x).ln()
                        : asymptotic::log_growth_main_term(m, x).ln());
  };
  return p;
}

SeriesProvider census_provider(const RunConfig& config) {
  const std::int64_t m =
      config.group == GroupChoice::FreeProduct ? require_m(config) : config.m;
  if (m < 2) reject("census method requires --m >= 2");
  if (config.n_min < 3) reject("census ratio requires n >= 3");
  SeriesProvider p;
  p.exact = false;
  p.cell = [m](std::int64_t n) { return Cell::of(growth::census_ratio(m, n)); };
  return p;
}

SeriesProvider make_provider(const RunConfig& config, MethodChoice method) {
  switch (config.group) {
    case GroupChoice::FreeRankOne:
      if (method != MethodChoice::Closed) reject("group z supports only the closed form");
      if (config.kind != KindChoice::All) reject("group z provides --kind all");
      return exact_provider([](std::int64_t) { return BigInt(1); });

    case GroupChoice::ZInvK: {
      if (method != MethodChoice::Closed)
        reject("group zinvk supports only the closed form");
      if (config.kind != KindChoice::All) reject("group zinvk provides --kind all");
      if (config.k == 0) reject("group zinvk requires nonzero --k");
      const std::int64_t k = config.k;
      return exact_provider([k](std::int64_t n) {
        return BigInt(growth::subgroup_count_z_inv_k(k, n));
      });
    }

    case GroupChoice::BaumslagSolitar: {
      switch (method) {
        case MethodChoice::Gelman: {
          const BSParams params = require_bs(config);
          if (config.kind == KindChoice::Maximal)
            return exact_provider([params](std::int64_t n) {
              return growth::max_count_coprime(params, n);
            });
          if (config.kind != KindChoice::All)
            reject("method gelman provides --kind all or maximal");
          return exact_provider(
              [params](std::int64_t n) { return growth::gelman_count(params, n); });
        }
        case MethodChoice::Semidirect: {
          const BSParams params = require_bs(config);
          if (config.kind != KindChoice::All)
            reject("method semidirect provides --kind all");
          return exact_provider(
              [params](std::int64_t n) { return growth::semidirect_count(params, n); });
        }
        case MethodChoice::Oracle:
          return oracle_provider(config);
        case MethodChoice::Bound: {
          const BSParams params = require_bs(config);
          if (config.kind != KindChoice::All) reject("method bound provides --kind all");
          auto series = std::make_shared<growth::GrowthSeries>(
              growth::shalev_upper_bound_series(params, config.n_max));
          return exact_provider(
              [series](std::int64_t n) { return series->values.at(n); });
        }
        case MethodChoice::Asymptotic:
          return asymptotic_provider(config);
        default:
          reject("group bs supports methods gelman, semidirect, oracle, bound, asymptotic");
      }
    }

    case GroupChoice::FreeProduct: {
      switch (method) {
        case MethodChoice::Hall:
          return hall_provider(config);
        case MethodChoice::Oracle:
          return oracle_provider(config);
        case MethodChoice::Asymptotic:
          return asymptotic_provider(config);
        case MethodChoice::Census:
          return census_provider(config);
        default:
          reject("group freeproduct supports methods hall, oracle, asymptotic, census");
      }
    }
  }
  reject("unsupported group");
}

} // namespace

std::string cmd_sequence(const RunConfig& config) {
  SeriesProvider provider = make_provider(config, effective_method(config));
  Table table;
  table.columns = {"n", "value"};
  for (std::int64_t n = config.n_min; n <= config.n_max; ++n)
    table.rows.push_back({Cell::of(BigInt(n)), provider.cell(n)});
  return render(table, config.format);
}

std::string cmd_compare(const RunConfig& config) {
  if (!config.method_set) reject("compare requires --method-a and --method-b");
  if (config.method == MethodChoice::Census || config.method_b == MethodChoice::Census)
    reject("census ratios are not comparable; use the sequence command");
  SeriesProvider a = make_provider(config, config.method);
  SeriesProvider b = make_provider(config, config.method_b);
  if (!a.exact && !b.exact)
    reject("compare needs at least one exact method");

  Table table;
  table.columns = {"n", "value", "value2", "ratio", "flag"};
  for (std::int64_t n = config.n_min; n <= config.n_max; ++n) {
    Cell ca = a.cell(n);
    Cell cb = b.cell(n);
    Cell ratio = Cell::empty();
    Cell flag = Cell::empty();
    if (a.exact && b.exact) {
      flag = Cell::of(std::string(a.value(n) == b.value(n) ? "equal" : "mismatch"));
    } else {
      const SeriesProvider& exact = a.exact ? a : b;
      const SeriesProvider& main = a.exact ? b : a;
      const BigInt v = exact.value(n);
      if (v > 0)
        ratio = Cell::of(asymptotic::ratio_to_main_term(
            v, main.main_term_m, static_cast<double>(n), main.term));
    }
    table.rows.push_back({Cell::of(BigInt(n)), std::move(ca), std::move(cb),
                          std::move(ratio), std::move(flag)});
  }
  return render(table, config.format);
}

namespace {

std::vector<std::int64_t> parse_grid(const std::string& text) {
  std::vector<std::int64_t> grid;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::int64_t value = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + comma;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value < 1)
      throw std::invalid_argument("invalid grid entry in '" + text + "'");
    grid.push_back(value);
    pos = comma + 1;
  }
  if (grid.empty()) throw std::invalid_argument("empty n grid");
  return grid;
}

const char* pass_fail(bool ok) { return ok ? "pass" : "fail"; }

} // namespace

std::string cmd_diagnostics(const RunConfig& config) {
  const std::int64_t m = config.m;
  if (m < 2) reject("diagnostics requires --m >= 2");
  const std::vector<std::int64_t> grid =
      parse_grid(config.grid.empty() ? "100,1000,10000" : config.grid);
  const std::string& which = config.check;
  const bool all = which == "all";

  Table table;
  table.columns = {"n", "check", "value", "bound", "flag"};
  auto row = [&table](std::int64_t n, const char* check, Cell value, Cell bound,
                      bool ok) {
    table.rows.push_back({Cell::of(BigInt(n)), Cell::of(std::string(check)),
                          std::move(value), std::move(bound),
                          Cell::of(std::string(pass_fail(ok)))});
  };

  bool known = false;
  if (all || which == "binom-bound") {
    known = true;
    for (std::int64_t n : grid) {
      if (n < 16) reject("binom-bound requires n >= 16");
      const auto sides = asymptotic::binomial_cutoff_bound(n);
      row(n, "binom-bound", Cell::ln(sides.lhs.ln()), Cell::ln(sides.rhs.ln()),
          sides.lhs < sides.rhs);
    }
  }
  if (all || which == "census-tail") {
    known = true;
    std::optional<double> prev;
    for (std::int64_t n : grid) {
      if (n < 16) reject("census-tail requires n >= 16");
      const double q = asymptotic::census_tail_bound(m, n).ln();
      row(n, "census-tail", Cell::ln(q),
          prev ? Cell::ln(*prev) : Cell::empty(), !prev || q < *prev);
      prev = q;
    }
  }
  if (all || which == "correction") {
    known = true;
    std::optional<double> prev;
    for (std::int64_t n : grid) {
      if (n < 4) reject("correction requires n >= 4");
      const double q = asymptotic::correction_term_ratio(m, n).ln();
      row(n, "correction", Cell::ln(q), prev ? Cell::ln(*prev) : Cell::empty(),
          !prev || q < *prev);
      prev = q;
    }
  }
  if (all || which == "divisor-sum") {
    known = true;
    for (std::int64_t n : grid) {
      if (n < m) reject("divisor-sum requires n >= m");
      const double sum = asymptotic::proper_divisor_power_sum(m, static_cast<double>(n));
      row(n, "divisor-sum", Cell::of(sum), Cell::of(static_cast<double>(n)),
          sum < static_cast<double>(n));
    }
  }
  if (all || which == "sandwich") {
    known = true;
    for (std::int64_t n : grid) {
      if (n < m) reject("sandwich requires n >= m");
      const auto s = asymptotic::growth_sandwich(m, n);
      row(n, "sandwich-lower", Cell::ln(s.lower.ln()), Cell::ln(s.mid.ln()),
          s.lower < s.mid);
      row(n, "sandwich-upper", Cell::ln(s.mid.ln()), Cell::ln(s.upper.ln()),
          s.mid < s.upper);
    }
  }
  if (!known)
    reject("unknown check '" + which +
           "' (expected binom-bound, census-tail, correction, divisor-sum, sandwich or all)");
  return render(table, config.format);
}

std::string cmd_montecarlo(const RunConfig& config) {
  if (config.m < 2) reject("montecarlo requires --m >= 2");
  if (config.trials < 1) reject("montecarlo requires --trials >= 1");
  if (config.n_min != config.n_max) reject("montecarlo takes a single --n, not a range");
  const permgrp::MonteCarloResult r = permgrp::monte_carlo_generation(
      config.m, static_cast<int>(config.n_min), config.trials, config.seed,
      config.threads);

  if (config.format == Format::Csv) {
    Table table;
    table.columns = {"m", "n", "trials", "seed", "fraction_alt_or_sym",
                     "fraction_given_few_fixed", "generating", "few_fixed",
                     "generating_few_fixed"};
    table.rows.push_back(
        {Cell::of(BigInt(r.m)), Cell::of(BigInt(r.n)), Cell::of(BigInt(r.trials)),
         Cell::of(BigInt(static_cast<unsigned long>(r.seed))),
         Cell::of(r.fraction_alt_or_sym), Cell::of(r.fraction_given_few_fixed),
         Cell::of(BigInt(r.generating)), Cell::of(BigInt(r.few_fixed)),
         Cell::of(BigInt(r.generating_few_fixed))});
    return render(table, Format::Csv);
  }

  nlohmann::ordered_json record;
  record["m"] = r.m;
  record["n"] = r.n;
  record["trials"] = r.trials;
  record["seed"] = r.seed;
  record["fraction_alt_or_sym"] = r.fraction_alt_or_sym;
  record["fraction_given_few_fixed"] = r.fraction_given_few_fixed;
  record["generating"] = r.generating;
  record["few_fixed"] = r.few_fixed;
  record["generating_few_fixed"] = r.generating_few_fixed;
  return record.dump(2) + "\n";
}

std::string run_command(const RunConfig& config) {
  switch (config.command) {
    case Command::Sequence: return cmd_sequence(config);
    case Command::Compare: return cmd_compare(config);
    case Command::Diagnostics: return cmd_diagnostics(config);
    case Command::MonteCarlo: return cmd_montecarlo(config);
  }
  reject("unknown command");
}

} // namespace bsgrowth::cli
