#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fdsec/fdsec.h"

namespace fdsec_cli {

/// section -> key -> raw value, as read from an INI file plus --set overrides.
using RawConfig = std::map<std::string, std::map<std::string, std::string>>;

/// Parses an INI file. Throws IoError if unreadable, ConfigError if malformed.
RawConfig load_config_file(const std::string& path);

/// Parses INI text (used by load_config_file and the tests).
RawConfig parse_config_text(const std::string& text);

/// Applies one "section.key=value" override.
void apply_override(RawConfig& raw, const std::string& assignment);

struct RunConfig {
    std::string name;
    fdsec_network_desc network{};
    double rho = 0.0;

    std::optional<double> tau_t;
    std::optional<double> tau_e;

    std::optional<double> sigma;
    std::optional<double> epsilon;
    double omega_min = 0.0;

    std::vector<double> q_grid; ///< empty when the config names none
    std::vector<fdsec_mode> modes{FDSEC_FD};

    fdsec_sim_config sim{};
    bool trials_given = false;
    std::vector<fdsec_mode> sim_modes; ///< empty: follow `modes`

    fdsec_quadrature quad{};
};

/// Validates keys and values and fills defaults. Throws ConfigError naming the first
/// missing or malformed field; unknown sections or keys are errors too.
RunConfig resolve_config(const RawConfig& raw);

double parse_number(const std::string& field, const std::string& text);

}  // namespace fdsec_cli
