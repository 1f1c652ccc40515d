#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "csv.hpp"

namespace fdsec_cli {

struct PresetOptions {
    std::uint64_t trials = 10000; ///< Monte Carlo trials per point; 0 skips the simulated columns
    std::uint64_t seed = 1;
    unsigned workers = 0;
    double tol = 0.0; ///< bisection tolerance, 0 for the library default
};

/// fig1 ... fig8 and nsee_vs_rho.
const std::vector<std::string>& preset_names();

/// Evaluates a preset. Throws ConfigError for an unknown name.
CsvTable run_preset(const std::string& name, const PresetOptions& opts);

}  // namespace fdsec_cli
