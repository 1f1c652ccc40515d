#include "config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "errors.hpp"

namespace fdsec_cli {

namespace {

const std::map<std::string, std::set<std::string>>& known_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"run", {"name"}},
        {"network",
         {"alpha", "lambda_l", "lambda_e", "n_e", "r_o", "p_t", "p_j", "rho", "rho_db", "eta", "eta_db",
          "p_c"}},
        {"rates", {"tau_t", "tau_e", "r_t", "r_s"}},
        {"constraints", {"sigma", "epsilon", "omega_min"}},
        {"grid", {"q", "q_start", "q_stop", "q_count", "mode"}},
        {"simulation",
         {"trials", "seed", "window_radius", "eavesdropper_radius", "workers", "mode", "q"}},
        {"quadrature", {"rel_tol", "max_panels", "tail_base", "tail_per_order"}},
    };
    return keys;
}

std::string trim(std::string s) {
    const auto not_space = [](unsigned char c) { return !std::isspace(c); };
    s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
    s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
    return s;
}

class Reader {
public:
    explicit Reader(const RawConfig& raw) : raw_(raw) {}

    std::optional<std::string> text(const std::string& section, const std::string& key) const {
        const auto s = raw_.find(section);
        if (s == raw_.end()) {
            return std::nullopt;
        }
        const auto k = s->second.find(key);
        if (k == s->second.end()) {
            return std::nullopt;
        }
        return k->second;
    }

    bool has(const std::string& section, const std::string& key) const {
        return text(section, key).has_value();
    }

    std::optional<double> number(const std::string& section, const std::string& key) const {
        const auto t = text(section, key);
        if (!t) {
            return std::nullopt;
        }
        return parse_number(section + "." + key, *t);
    }

    double required(const std::string& section, const std::string& key) const {
        const auto v = number(section, key);
        if (!v) {
            throw ConfigError("missing required field " + section + "." + key);
        }
        return *v;
    }

    std::optional<long long> integer(const std::string& section, const std::string& key) const {
        const auto t = text(section, key);
        if (!t) {
            return std::nullopt;
        }
        long long v = 0;
        const auto* end = t->data() + t->size();
        const auto res = std::from_chars(t->data(), end, v);
        if (res.ec != std::errc() || res.ptr != end) {
            throw ConfigError(section + "." + key + ": not an integer: '" + *t + "'");
        }
        return v;
    }

private:
    const RawConfig& raw_;
};

std::vector<fdsec_mode> parse_modes(const std::string& field, const std::string& text) {
    if (text == "hd") {
        return {FDSEC_HD};
    }
    if (text == "fd") {
        return {FDSEC_FD};
    }
    if (text == "both") {
        return {FDSEC_HD, FDSEC_FD};
    }
    throw ConfigError(field + ": expected hd, fd or both, got '" + text + "'");
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace

double parse_number(const std::string& field, const std::string& text) {
    const std::string t = trim(text);
    double v = 0.0;
    const auto* end = t.data() + t.size();
    const auto res = std::from_chars(t.data(), end, v);
    if (t.empty() || res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) {
        throw ConfigError(field + ": not a number: '" + text + "'");
    }
    return v;
}

RawConfig parse_config_text(const std::string& text) {
    namespace pt = boost::property_tree;
    pt::ptree tree;
    std::istringstream in(text);
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw ConfigError(std::string("malformed config: ") + e.message() + " (line " +
                          std::to_string(e.line()) + ")");
    }
    RawConfig raw;
    for (const auto& [section, body] : tree) {
        if (body.empty()) {
            throw ConfigError("entry '" + section + "' must sit inside a [section]");
        }
        auto& dst = raw[section];
        for (const auto& [key, value] : body) {
            dst[key] = trim(value.get_value<std::string>());
        }
    }
    return raw;
}

RawConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read config " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

void apply_override(RawConfig& raw, const std::string& assignment) {
    const auto eq = assignment.find('=');
    const auto dot = assignment.find('.');
    if (eq == std::string::npos || dot == std::string::npos || dot > eq || dot == 0 || dot + 1 == eq) {
        throw ConfigError("override must look like section.key=value, got '" + assignment + "'");
    }
    raw[trim(assignment.substr(0, dot))][trim(assignment.substr(dot + 1, eq - dot - 1))] =
        trim(assignment.substr(eq + 1));
}

RunConfig resolve_config(const RawConfig& raw) {
    for (const auto& [section, body] : raw) {
        const auto known = known_keys().find(section);
        if (known == known_keys().end()) {
            throw ConfigError("unknown section [" + section + "]");
        }
        for (const auto& [key, value] : body) {
            if (!known->second.count(key)) {
                throw ConfigError("unknown key " + section + "." + key);
            }
        }
    }

    const Reader r(raw);
    RunConfig cfg;
    cfg.name = r.text("run", "name").value_or("");

    auto& n = cfg.network;
    fdsec_network_desc_default(&n);
    n.alpha = r.required("network", "alpha");
    n.lambda_l = r.required("network", "lambda_l");
    n.lambda_e = r.required("network", "lambda_e");
    if (!r.has("network", "n_e")) {
        throw ConfigError("missing required field network.n_e");
    }
    const long long n_e = *r.integer("network", "n_e");
    if (n_e < 1 || n_e > 1'000'000) {
        throw ConfigError("network.n_e must be a positive integer");
    }
    n.n_e = static_cast<int>(n_e);
    n.r_o = r.required("network", "r_o");
    n.p_t = r.number("network", "p_t").value_or(1.0);

    const int power_keys = r.has("network", "rho") + r.has("network", "rho_db") + r.has("network", "p_j");
    if (power_keys == 0) {
        throw ConfigError("missing required field network.rho (or network.rho_db, network.p_j)");
    }
    if (power_keys > 1) {
        throw ConfigError("give only one of network.rho, network.rho_db, network.p_j");
    }
    if (auto v = r.number("network", "rho")) {
        cfg.rho = *v;
        n.p_j = *v * n.p_t;
    } else if (auto db = r.number("network", "rho_db")) {
        cfg.rho = from_db(*db);
        n.p_j = cfg.rho * n.p_t;
    } else {
        n.p_j = r.required("network", "p_j");
        cfg.rho = n.p_j / n.p_t;
    }
    if (r.has("network", "eta") && r.has("network", "eta_db")) {
        throw ConfigError("give only one of network.eta, network.eta_db");
    }
    if (auto db = r.number("network", "eta_db")) {
        n.eta = from_db(*db);
    } else {
        n.eta = r.number("network", "eta").value_or(0.0);
    }
    n.p_c = r.number("network", "p_c").value_or(1.0);

    const bool sir_form = r.has("rates", "tau_t") || r.has("rates", "tau_e");
    const bool rate_form = r.has("rates", "r_t") || r.has("rates", "r_s");
    if (sir_form && rate_form) {
        throw ConfigError("give rates either as tau_t/tau_e or as r_t/r_s");
    }
    if (rate_form) {
        const double r_t = r.required("rates", "r_t");
        const double r_s = r.required("rates", "r_s");
        cfg.tau_t = std::exp2(r_t) - 1.0;
        cfg.tau_e = std::exp2(r_t - r_s) - 1.0;
    } else {
        cfg.tau_t = r.number("rates", "tau_t");
        cfg.tau_e = r.number("rates", "tau_e");
    }

    cfg.sigma = r.number("constraints", "sigma");
    cfg.epsilon = r.number("constraints", "epsilon");
    cfg.omega_min = r.number("constraints", "omega_min").value_or(0.0);

    if (auto list = r.text("grid", "q")) {
        if (r.has("grid", "q_start") || r.has("grid", "q_stop") || r.has("grid", "q_count")) {
            throw ConfigError("give either grid.q or grid.q_start/q_stop/q_count");
        }
        std::stringstream ss(*list);
        std::string item;
        while (std::getline(ss, item, ',')) {
            cfg.q_grid.push_back(parse_number("grid.q", item));
        }
        if (cfg.q_grid.empty()) {
            throw ConfigError("grid.q is empty");
        }
    } else if (r.has("grid", "q_start") || r.has("grid", "q_stop") || r.has("grid", "q_count")) {
        const double start = r.required("grid", "q_start");
        const double stop = r.required("grid", "q_stop");
        const auto count = r.integer("grid", "q_count");
        if (!count) {
            throw ConfigError("missing required field grid.q_count");
        }
        if (*count < 1 || *count > 1'000'000) {
            throw ConfigError("grid.q_count must be between 1 and 1000000");
        }
        for (long long i = 0; i < *count; ++i) {
            cfg.q_grid.push_back(*count == 1 ? start
                                             : start + (stop - start) * static_cast<double>(i) /
                                                           static_cast<double>(*count - 1));
        }
    }
    if (auto m = r.text("grid", "mode")) {
        cfg.modes = parse_modes("grid.mode", *m);
    }

    fdsec_sim_config_default(&cfg.sim);
    if (auto t = r.integer("simulation", "trials")) {
        if (*t < 1) {
            throw ConfigError("simulation.trials must be at least 1");
        }
        cfg.sim.trials = static_cast<std::uint64_t>(*t);
        cfg.trials_given = true;
    }
    if (auto s = r.integer("simulation", "seed")) {
        if (*s < 0) {
            throw ConfigError("simulation.seed must be non-negative");
        }
        cfg.sim.seed = static_cast<std::uint64_t>(*s);
    }
    cfg.sim.window_radius = r.number("simulation", "window_radius").value_or(0.0);
    cfg.sim.eavesdropper_radius = r.number("simulation", "eavesdropper_radius").value_or(0.0);
    if (auto w = r.integer("simulation", "workers")) {
        if (*w < 0 || *w > 4096) {
            throw ConfigError("simulation.workers must be between 0 and 4096");
        }
        cfg.sim.workers = static_cast<unsigned>(*w);
    }
    if (auto m = r.text("simulation", "mode")) {
        cfg.sim_modes = parse_modes("simulation.mode", *m);
    }
    cfg.sim.q = r.number("simulation", "q").value_or(cfg.sim.q);

    fdsec_quadrature_default(&cfg.quad);
    cfg.quad.rel_tol = r.number("quadrature", "rel_tol").value_or(cfg.quad.rel_tol);
    if (auto p = r.integer("quadrature", "max_panels")) {
        if (*p < 16 || *p > (1 << 24)) {
            throw ConfigError("quadrature.max_panels must be between 16 and 16777216");
        }
        cfg.quad.max_panels = static_cast<int>(*p);
    }
    cfg.quad.tail_base = r.number("quadrature", "tail_base").value_or(cfg.quad.tail_base);
    cfg.quad.tail_per_order = r.number("quadrature", "tail_per_order").value_or(cfg.quad.tail_per_order);
    return cfg;
}

}  // namespace fdsec_cli
