#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "csv.hpp"
#include "fdsec/fdsec.h"

namespace fdsec_cli {

/// The resolved inputs behind a row. Appended to every row so each line stands alone.
struct ParamBlock {
    fdsec_network_desc net{};
    std::optional<double> tau_t;
    std::optional<double> tau_e;
    std::optional<double> sigma;
    std::optional<double> epsilon;
    std::optional<double> omega_min;
    std::string mode;
    std::optional<std::uint64_t> trials;
    std::optional<std::uint64_t> seed;
};

/// Adds alpha, lambda_l, ..., seed after the row's own columns, skipping names the row
/// already carries.
void append_params(Row& row, const ParamBlock& p);

const char* mode_name(fdsec_mode mode);

/// Text cell for an optional count.
Cell count_cell(std::optional<std::uint64_t> n);

}  // namespace fdsec_cli
