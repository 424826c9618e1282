#ifndef BSGROWTH_CLI_COMMANDS_HPP
#define BSGROWTH_CLI_COMMANDS_HPP

#include <string>

#include "run_config.hpp"
#include "table.hpp"

namespace bsgrowth::cli {

// Each command returns the fully rendered output (CSV or JSON per the
// config). Parameter problems throw std::invalid_argument (exit code 2);
// mathematically impossible intermediate values surface as
// ConsistencyError (exit code 3).

std::string cmd_sequence(const RunConfig& config);
std::string cmd_compare(const RunConfig& config);
std::string cmd_diagnostics(const RunConfig& config);
std::string cmd_montecarlo(const RunConfig& config);

std::string run_command(const RunConfig& config);

} // namespace bsgrowth::cli

#endif // BSGROWTH_CLI_COMMANDS_HPP
