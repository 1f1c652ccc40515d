#include "columns.hpp"

#include <algorithm>

namespace fdsec_cli {

const char* mode_name(fdsec_mode mode) { return mode == FDSEC_HD ? "hd" : "fd"; }

Cell count_cell(std::optional<std::uint64_t> n) {
    return n ? Cell(static_cast<unsigned long long>(*n)) : Cell(std::string());
}

void append_params(Row& row, const ParamBlock& p) {
    const Row block{
        {"alpha", p.net.alpha},
        {"lambda_l", p.net.lambda_l},
        {"lambda_e", p.net.lambda_e},
        {"n_e", p.net.n_e},
        {"r_o", p.net.r_o},
        {"p_t", p.net.p_t},
        {"p_j", p.net.p_j},
        {"rho", p.net.p_j / p.net.p_t},
        {"eta", p.net.eta},
        {"p_c", p.net.p_c},
        {"tau_t", p.tau_t},
        {"tau_e", p.tau_e},
        {"sigma", p.sigma},
        {"epsilon", p.epsilon},
        {"omega_min", p.omega_min},
        {"mode", p.mode},
        {"trials", count_cell(p.trials)},
        {"seed", count_cell(p.seed)},
    };
    for (const auto& entry : block) {
        const bool present = std::any_of(row.begin(), row.end(),
                                         [&](const auto& c) { return c.first == entry.first; });
        if (!present) {
            row.push_back(entry);
        }
    }
}

}  // namespace fdsec_cli
