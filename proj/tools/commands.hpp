#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"
#include "csv.hpp"

namespace fdsec_cli {

/// Command-line flags shared by every subcommand.
struct Flags {
    std::optional<std::string> config;
    std::vector<std::string> overrides; ///< --set section.key=value, applied in order
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<std::string> preset;
    std::optional<double> tol;
    std::optional<unsigned> workers;
};

/// Reads --config, applies --set overrides, then --seed/--trials/--workers.
RunConfig load_run_config(const Flags& flags);

CsvTable analytic_table(const RunConfig& cfg);
CsvTable optimize_table(const RunConfig& cfg, const std::string& objective, double tol);

struct SimulationTable {
    CsvTable table;
    std::vector<std::string> failures; ///< filled only when checking against the analytic values
};
/// Monte Carlo estimates on the configured grid. With `check` set, each estimate is compared
/// with its analytic counterpart (3 standard errors) and disagreements are listed.
SimulationTable simulation_table(const RunConfig& cfg, bool check);

/// Writes `table` to <out_dir>/<name>.csv, creating the directory. Returns the path.
std::string write_output(const CsvTable& table, const std::string& out_dir, const std::string& name);

/// Full command-line entry point. Returns the process exit status:
/// 0 success, 1 validation/domain/IO failure, 2 usage or configuration error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fdsec_cli
