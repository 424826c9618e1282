#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include <bsgrowth/errors.hpp>

#include "commands.hpp"
#include "run_config.hpp"

namespace {

using bsgrowth::cli::Format;
using bsgrowth::cli::GroupChoice;
using bsgrowth::cli::KindChoice;
using bsgrowth::cli::RunConfig;

void add_common(CLI::App* cmd, RunConfig& config, std::string& range,
                std::string& format, std::string& output) {
  cmd->add_option("--format", format, "Output format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--output", output,
                  "Write to this file instead of stdout (BSGROWTH_OUTPUT_DIR "
                  "overrides the directory for relative paths)");
  cmd->add_option("--threads", config.threads, "Worker threads for partitionable work")
      ->check(CLI::Range(1, 256))
      ->default_val(1);
  cmd->add_option("--n", range, "Index or index range, e.g. 5 or 1..10")->required();
}

void add_group(CLI::App* cmd, RunConfig& config, std::string& group, std::string& kind) {
  cmd->add_option("--group", group, "Group family: bs, freeproduct, z, zinvk")
      ->check(CLI::IsMember({"bs", "freeproduct", "z", "zinvk"}))
      ->required();
  cmd->add_option("--a", config.a, "First relation exponent (group bs)");
  cmd->add_option("--b", config.b, "Second relation exponent (group bs)");
  cmd->add_option("--m", config.m, "Torsion order (group freeproduct)");
  cmd->add_option("--k", config.k, "Inverted integer (group zinvk)");
  cmd->add_option("--kind", kind, "Count kind: all, maximal, trans, prim, hom")
      ->check(CLI::IsMember({"all", "maximal", "trans", "prim", "hom"}))
      ->default_val("all");
}

GroupChoice to_group(const std::string& name) {
  if (name == "bs") return GroupChoice::BaumslagSolitar;
  if (name == "freeproduct") return GroupChoice::FreeProduct;
  if (name == "z") return GroupChoice::FreeRankOne;
  return GroupChoice::ZInvK;
}

KindChoice to_kind(const std::string& name) {
  if (name == "maximal") return KindChoice::Maximal;
  if (name == "trans") return KindChoice::Trans;
  if (name == "prim") return KindChoice::Prim;
  if (name == "hom") return KindChoice::Hom;
  return KindChoice::All;
}

void write_output(const std::string& content, const std::string& output) {
  if (output.empty()) {
    std::cout << content;
    return;
  }
  std::filesystem::path path(output);
  if (const char* dir = std::getenv("BSGROWTH_OUTPUT_DIR"); dir && path.is_relative())
    path = std::filesystem::path(dir) / path;
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open output file " + path.string());
  file << content;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and asymptotic subgroup-growth sequences of "
               "Baumslag-Solitar groups and free products Z * Z/mZ"};
  app.require_subcommand(1);

  RunConfig config;
  std::string range, format = "csv", mc_format = "json", output, group, kind = "all";
  std::string method, method_a, method_b;

  CLI::App* sequence = app.add_subcommand("sequence", "Emit one exact or log-space series");
  add_group(sequence, config, group, kind);
  sequence->add_option("--method", method,
                       "gelman, semidirect, hall, oracle, asymptotic, census, bound, closed");
  add_common(sequence, config, range, format, output);

  CLI::App* compare = app.add_subcommand("compare", "Tabulate two methods side by side");
  add_group(compare, config, group, kind);
  compare->add_option("--method-a", method_a, "First method")->required();
  compare->add_option("--method-b", method_b, "Second method")->required();
  add_common(compare, config, range, format, output);

  CLI::App* diagnostics =
      app.add_subcommand("diagnostics", "Bound and decay checks over an index grid");
  diagnostics->add_option("--m", config.m, "Torsion order")->required();
  diagnostics->add_option("--check", config.check,
                          "binom-bound, census-tail, correction, divisor-sum, sandwich, all")
      ->default_val("all");
  diagnostics->add_option("--grid", config.grid, "Comma-separated index grid")
      ->default_val("100,1000,10000");
  diagnostics->add_option("--format", format, "Output format: csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  diagnostics->add_option("--output", output, "Write to this file instead of stdout");
  diagnostics->add_option("--threads", config.threads, "Worker threads")->default_val(1);

  CLI::App* montecarlo =
      app.add_subcommand("montecarlo", "Seeded random-generation probe in Sym(n)");
  montecarlo->add_option("--m", config.m, "Torsion order")->required();
  montecarlo->add_option("--n", range, "Degree (3..20)")->required();
  montecarlo->add_option("--trials", config.trials, "Number of trials")->default_val(500);
  montecarlo->add_option("--seed", config.seed, "Random seed")->default_val(0);
  montecarlo->add_option("--format", mc_format, "Output format: csv or json (default json)")
      ->check(CLI::IsMember({"csv", "json"}));
  montecarlo->add_option("--output", output, "Write to this file instead of stdout");
  montecarlo->add_option("--threads", config.threads, "Worker threads")
      ->check(CLI::Range(1, 256))
      ->default_val(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (sequence->parsed()) {
      config.command = bsgrowth::cli::Command::Sequence;
      config.group = to_group(group);
      config.kind = to_kind(kind);
      if (!method.empty()) {
        config.method = bsgrowth::cli::parse_method(method);
        config.method_set = true;
      }
    } else if (compare->parsed()) {
      config.command = bsgrowth::cli::Command::Compare;
      config.group = to_group(group);
      config.kind = to_kind(kind);
      config.method = bsgrowth::cli::parse_method(method_a);
      config.method_b = bsgrowth::cli::parse_method(method_b);
      config.method_set = true;
    } else if (diagnostics->parsed()) {
      config.command = bsgrowth::cli::Command::Diagnostics;
      range = "1";
    } else {
      config.command = bsgrowth::cli::Command::MonteCarlo;
      format = mc_format;
    }
    if (!range.empty()) bsgrowth::cli::parse_range(range, config.n_min, config.n_max);
    config.format = (format == "json") ? Format::Json : Format::Csv;

    write_output(bsgrowth::cli::run_command(config), output);
    return 0;
  } catch (const bsgrowth::ConsistencyError& e) {
    std::cerr << "consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
