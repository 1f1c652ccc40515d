#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <sstream>

#include "api.hpp"
#include "columns.hpp"
#include "errors.hpp"
#include "presets.hpp"

namespace fdsec_cli {

namespace {

constexpr std::uint64_t kSimulateTrials = 100000;
constexpr std::uint64_t kSweepTrials = 10000;

ParamBlock block_of(const RunConfig& cfg, const std::string& mode, bool mc) {
    ParamBlock b;
    b.net = cfg.network;
    b.tau_t = cfg.tau_t;
    b.tau_e = cfg.tau_e;
    b.sigma = cfg.sigma;
    b.epsilon = cfg.epsilon;
    b.omega_min = cfg.omega_min;
    b.mode = mode;
    if (mc) {
        b.trials = cfg.sim.trials;
        b.seed = cfg.sim.seed;
    }
    return b;
}

double require(const std::optional<double>& v, const char* field) {
    if (!v) {
        throw ConfigError(std::string("missing required field ") + field);
    }
    return *v;
}

/// Value of an fdsec_* call, or empty when the point lies outside the formula's domain.
template <class Fn, class... Args>
std::optional<double> where_defined(Fn fn, Args... args) {
    double out = 0.0;
    const fdsec_status s = fn(args..., &out);
    if (s == FDSEC_ERR_DOMAIN) {
        return std::nullopt;
    }
    check(s);
    return out;
}

const fdsec_quadrature* quad_of(const RunConfig& cfg) { return &cfg.quad; }

std::optional<Constraints> constraints_of(const RunConfig& cfg, const fdsec_params* p) {
    if (!cfg.sigma && !cfg.epsilon) {
        return std::nullopt;
    }
    return make_constraints(p, require(cfg.sigma, "constraints.sigma"),
                            require(cfg.epsilon, "constraints.epsilon"));
}

std::string default_name(const RunConfig& cfg, const std::string& fallback) {
    return cfg.name.empty() ? fallback : cfg.name;
}

}  // namespace

RunConfig load_run_config(const Flags& flags) {
    RawConfig raw;
    if (flags.config) {
        raw = load_config_file(*flags.config);
    }
    for (const auto& o : flags.overrides) {
        apply_override(raw, o);
    }
    RunConfig cfg = resolve_config(raw);
    if (flags.seed) {
        cfg.sim.seed = *flags.seed;
    }
    if (flags.trials) {
        cfg.sim.trials = *flags.trials;
        cfg.trials_given = true;
    }
    if (!cfg.trials_given) {
        cfg.sim.trials = kSimulateTrials;
    }
    if (flags.workers) {
        cfg.sim.workers = *flags.workers;
    }
    return cfg;
}

CsvTable analytic_table(const RunConfig& cfg) {
    const auto p = make_params(cfg.network);
    const auto c = constraints_of(cfg, p.get());
    const std::vector<double> grid =
        cfg.q_grid.empty() ? std::vector<double>{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0}
                           : cfg.q_grid;
    const bool eves = cfg.network.lambda_e > 0.0;

    CsvTable t;
    for (fdsec_mode mode : cfg.modes) {
        for (double q : grid) {
            std::optional<double> pco, upper, lower, pso, pso_closed, pso_large, asln, nst, nsee;
            if (cfg.tau_t) {
                pco = where_defined(fdsec_pco_exact, p.get(), mode, q, *cfg.tau_t, quad_of(cfg));
                double u = 0.0;
                double l = 0.0;
                const fdsec_status s = fdsec_pco_bounds(p.get(), mode, q, *cfg.tau_t, &u, &l);
                if (s != FDSEC_ERR_DOMAIN) {
                    check(s);
                    upper = u;
                    lower = l;
                }
            }
            if (cfg.tau_e && eves) {
                pso = where_defined(fdsec_pso_upper, p.get(), mode, q, *cfg.tau_e, quad_of(cfg));
                pso_closed = mode == FDSEC_HD
                                 ? where_defined(fdsec_pso_hd_closed, p.get(), q, *cfg.tau_e)
                                 : where_defined(fdsec_pso_fd_approx, p.get(), q, *cfg.tau_e);
                pso_large = where_defined(fdsec_pso_large_ne, p.get(), q, *cfg.tau_e);
            }
            if (cfg.tau_t && cfg.tau_e && eves) {
                asln = where_defined(fdsec_asln, p.get(), q, *cfg.tau_t, *cfg.tau_e);
            }
            if (c) {
                nst = where_defined(fdsec_nst, p.get(), c->get(), q);
                nsee = where_defined(fdsec_nsee, p.get(), c->get(), q);
            }
            Row row{{"mode", mode_name(mode)},
                    {"q", q},
                    {"pco_exact", pco},
                    {"pco_upper", upper},
                    {"pco_lower", lower},
                    {"pso_upper", pso},
                    {"pso_closed_form", pso_closed},
                    {"pso_large_ne", pso_large},
                    {"asln", asln},
                    {"nst", nst},
                    {"nsee", nsee}};
            append_params(row, block_of(cfg, mode_name(mode), false));
            t.add(row);
        }
    }
    return t;
}

CsvTable optimize_table(const RunConfig& cfg, const std::string& objective, double tol) {
    const auto p = make_params(cfg.network);
    fdsec_opt_result r{};
    std::optional<double> q_m;
    std::optional<double> extra;
    std::string extra_name;

    if (objective == "asln") {
        const double tau_t = require(cfg.tau_t, "rates.tau_t");
        const double tau_e = require(cfg.tau_e, "rates.tau_e");
        check(fdsec_optimize_asln(p.get(), tau_t, tau_e, tol, &r));
        extra_name = "q_closed_sic";
        if (cfg.network.eta == 0.0) {
            extra = std::min(1.0, value_of(fdsec_asln_q_closed_sic, p.get(), tau_t, tau_e));
        }
    } else if (objective == "nst" || objective == "nsee" || objective == "nsee-constrained") {
        const auto c = make_constraints(p.get(), require(cfg.sigma, "constraints.sigma"),
                                        require(cfg.epsilon, "constraints.epsilon"));
        fdsec_constraints_info info{};
        check(fdsec_constraints_describe(c.get(), &info));
        if (info.has_q_m) {
            q_m = info.q_m;
        }
        if (objective == "nst") {
            check(fdsec_optimize_nst(p.get(), c.get(), tol, &r));
            extra_name = "q_dense_limit";
            if (info.has_q_m) {
                extra = value_of(fdsec_nst_q_dense_limit, p.get(), c.get());
            }
        } else if (objective == "nsee") {
            check(fdsec_optimize_nsee(p.get(), c.get(), tol, &r));
            extra_name = "throughput";
            if (r.has_q) {
                extra = value_of(fdsec_nst, p.get(), c.get(), r.q_star);
            }
        } else {
            check(fdsec_optimize_nsee_constrained(p.get(), c.get(), cfg.omega_min, tol, &r));
            extra_name = "throughput";
            if (r.has_q) {
                extra = value_of(fdsec_nst, p.get(), c.get(), r.q_star);
            }
        }
    } else {
        throw ConfigError("unknown objective '" + objective +
                          "' (expected asln, nst, nsee or nsee-constrained)");
    }

    CsvTable t;
    Row row{{"objective", objective},
            {"q_star", r.has_q ? std::optional<double>(r.q_star) : std::nullopt},
            {"value", r.objective},
            {"case_tag", fdsec_case_string(r.case_tag)},
            {"residual", r.residual},
            {"q_m", q_m},
            {extra_name, extra}};
    append_params(row, block_of(cfg, "", false));
    t.add(row);
    return t;
}

SimulationTable simulation_table(const RunConfig& cfg, bool check_analytic) {
    const bool want_pco = cfg.tau_t.has_value();
    const bool want_pso = cfg.tau_e.has_value() && cfg.network.lambda_e > 0.0;
    if (!want_pco && !want_pso) {
        throw ConfigError("missing required field rates.tau_t (or rates.tau_e with network.lambda_e > 0)");
    }
    const auto p = make_params(cfg.network);
    const std::vector<double> grid = cfg.q_grid.empty() ? std::vector<double>{cfg.sim.q} : cfg.q_grid;
    const auto& modes = cfg.sim_modes.empty() ? cfg.modes : cfg.sim_modes;

    SimulationTable out;
    for (fdsec_mode mode : modes) {
        for (double q : grid) {
            fdsec_sim_config sc = cfg.sim;
            sc.mode = mode;
            sc.q = q;
            fdsec_sim_config resolved{};
            check(fdsec_sim_config_resolve(p.get(), &sc, want_pso ? &*cfg.tau_e : nullptr, &resolved));

            std::optional<double> pco_mc, pco_se, pco_exact, pso_mc, pso_se, pso_upper;
            std::optional<double> pco_ok, pso_ok;
            std::uint64_t ill = 0;
            if (want_pco) {
                fdsec_estimate e{};
                check(fdsec_estimate_pco(p.get(), &sc, *cfg.tau_t, &e));
                pco_mc = e.p_hat;
                pco_se = e.std_err;
                pco_exact = value_of(fdsec_pco_exact, p.get(), mode, q, *cfg.tau_t, quad_of(cfg));
                if (check_analytic) {
                    const bool ok = std::abs(e.p_hat - *pco_exact) <= 3.0 * e.std_err;
                    pco_ok = ok ? 1.0 : 0.0;
                    if (!ok) {
                        std::ostringstream msg;
                        msg << "pco mode=" << mode_name(mode) << " q=" << format_number(q) << ": mc "
                            << format_number(e.p_hat) << " +- " << format_number(e.std_err)
                            << " vs exact " << format_number(*pco_exact);
                        out.failures.push_back(msg.str());
                    }
                }
            }
            if (want_pso) {
                fdsec_estimate e{};
                check(fdsec_estimate_pso(p.get(), &sc, *cfg.tau_e, &e));
                pso_mc = e.p_hat;
                pso_se = e.std_err;
                ill = e.ill_conditioned;
                pso_upper = value_of(fdsec_pso_upper, p.get(), mode, q, *cfg.tau_e, quad_of(cfg));
                if (check_analytic) {
                    const bool ok = e.p_hat <= *pso_upper + 3.0 * e.std_err;
                    pso_ok = ok ? 1.0 : 0.0;
                    if (!ok) {
                        std::ostringstream msg;
                        msg << "pso mode=" << mode_name(mode) << " q=" << format_number(q) << ": mc "
                            << format_number(e.p_hat) << " +- " << format_number(e.std_err)
                            << " above bound " << format_number(*pso_upper);
                        out.failures.push_back(msg.str());
                    }
                }
            }
            Row row{{"mode", mode_name(mode)},
                    {"q", q},
                    {"pco_mc", pco_mc},
                    {"pco_mc_stderr", pco_se},
                    {"pco_exact", pco_exact},
                    {"pso_mc", pso_mc},
                    {"pso_mc_stderr", pso_se},
                    {"pso_upper", pso_upper},
                    {"ill_conditioned", static_cast<unsigned long long>(ill)},
                    {"window_radius", resolved.window_radius},
                    {"eavesdropper_radius", resolved.eavesdropper_radius}};
            if (check_analytic) {
                row.emplace_back("pco_ok", pco_ok);
                row.emplace_back("pso_ok", pso_ok);
            }
            append_params(row, block_of(cfg, mode_name(mode), true));
            out.table.add(row);
        }
    }
    return out;
}

std::string write_output(const CsvTable& table, const std::string& out_dir, const std::string& name) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory " + out_dir + ": " + ec.message());
    }
    const std::string path = (fs::path(out_dir) / (name + ".csv")).string();
    table.save(path);
    return path;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Secrecy performance of ad hoc networks with full-duplex jamming receivers", "fdsec"};
    app.require_subcommand(1);
    app.fallthrough();

    Flags flags;
    std::string config_path;
    std::string preset;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    double tol = 0.0;
    unsigned workers = 0;
    auto* o_config = app.add_option("--config", config_path, "INI configuration file");
    app.add_option("--set", flags.overrides, "Override one entry, section.key=value (repeatable)");
    app.add_option("--out", flags.out_dir, "Output directory for CSV files")->capture_default_str();
    auto* o_seed = app.add_option("--seed", seed, "Monte Carlo seed");
    auto* o_trials = app.add_option("--trials", trials, "Monte Carlo trials per point");
    auto* o_tol = app.add_option("--tol", tol, "Bisection tolerance")->check(CLI::PositiveNumber);
    auto* o_workers = app.add_option("--workers", workers, "Worker threads, 0 for all cores");

    auto* analytic = app.add_subcommand("analytic", "Evaluate the outage formulas and objectives on a q grid");
    auto* optimize = app.add_subcommand("optimize", "Find the optimal fraction of full-duplex receivers");
    std::string objective;
    optimize->add_option("objective", objective, "asln, nst, nsee or nsee-constrained")
        ->required()
        ->check(CLI::IsMember({"asln", "nst", "nsee", "nsee-constrained"}));
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo outage estimates");
    auto* sweep = app.add_subcommand("sweep", "Reproduce a named figure sweep");
    auto* o_preset = sweep->add_option("--preset", preset, "Preset name")->required();
    (void)o_preset;
    auto* validate = app.add_subcommand("validate", "Compare Monte Carlo estimates with the analytic results");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    if (o_config->count() > 0) {
        flags.config = config_path;
    }
    if (o_seed->count() > 0) {
        flags.seed = seed;
    }
    if (o_trials->count() > 0) {
        flags.trials = trials;
    }
    if (o_tol->count() > 0) {
        flags.tol = tol;
    }
    if (o_workers->count() > 0) {
        flags.workers = workers;
    }

    try {
        const double bisect_tol = flags.tol.value_or(0.0);
        if (*sweep) {
            if (flags.config || !flags.overrides.empty()) {
                throw ConfigError("sweep presets are fixed; --config and --set do not apply");
            }
            PresetOptions po;
            po.trials = flags.trials.value_or(kSweepTrials);
            po.seed = flags.seed.value_or(1);
            po.workers = flags.workers.value_or(0);
            po.tol = bisect_tol;
            const CsvTable table = run_preset(preset, po);
            out << write_output(table, flags.out_dir, preset) << '\n';
            return 0;
        }
        if (!flags.config && flags.overrides.empty()) {
            throw ConfigError("missing required field network.alpha (pass --config or --set)");
        }
        const RunConfig cfg = load_run_config(flags);
        if (*analytic) {
            out << write_output(analytic_table(cfg), flags.out_dir, default_name(cfg, "analytic")) << '\n';
        } else if (*optimize) {
            const CsvTable table = optimize_table(cfg, objective, bisect_tol);
            table.write(out);
            out << write_output(table, flags.out_dir, default_name(cfg, "optimize_" + objective)) << '\n';
        } else if (*simulate) {
            const auto sim = simulation_table(cfg, false);
            out << write_output(sim.table, flags.out_dir, default_name(cfg, "simulate")) << '\n';
        } else if (*validate) {
            const auto sim = simulation_table(cfg, true);
            out << write_output(sim.table, flags.out_dir, default_name(cfg, "validate")) << '\n';
            if (!sim.failures.empty()) {
                for (const auto& f : sim.failures) {
                    err << "FAIL " << f << '\n';
                }
                throw ValidationFailure(std::to_string(sim.failures.size()) + " check(s) failed");
            }
            out << "all checks passed\n";
        }
        return 0;
    } catch (const ConfigError& e) {
        err << "fdsec: configuration error: " << e.what() << '\n';
        return 2;
    } catch (const ApiError& e) {
        err << "fdsec: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        err << "fdsec: " << e.what() << '\n';
        return 1;
    } catch (const ValidationFailure& e) {
        err << "fdsec: validation failed: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "fdsec: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace fdsec_cli
