#include "presets.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <optional>

#include "api.hpp"
#include "columns.hpp"
#include "errors.hpp"

namespace fdsec_cli {

namespace {

/// 10^lo ... 10^hi with `per_decade` points per decade.
std::vector<double> logspace(int lo, int hi, int per_decade) {
    std::vector<double> out;
    for (int k = 0; k <= (hi - lo) * per_decade; ++k) {
        out.push_back(std::pow(10.0, lo + static_cast<double>(k) / per_decade));
    }
    return out;
}

/// lo, lo + step, ..., hi over `count` intervals.
std::vector<double> linspace(double lo, double hi, int count) {
    std::vector<double> out;
    for (int k = 0; k <= count; ++k) {
        out.push_back(lo + (hi - lo) * static_cast<double>(k) / count);
    }
    return out;
}

fdsec_network_desc network(double alpha, double lambda_l, double lambda_e, int n_e, double r_o,
                           double rho, double eta) {
    fdsec_network_desc d;
    fdsec_network_desc_default(&d);
    d.alpha = alpha;
    d.lambda_l = lambda_l;
    d.lambda_e = lambda_e;
    d.n_e = n_e;
    d.r_o = r_o;
    d.p_t = 1.0;
    d.p_j = rho;
    d.eta = eta;
    d.p_c = 1.0;
    return d;
}

double db(double x) { return std::pow(10.0, x / 10.0); }

fdsec_sim_config sim_config(const PresetOptions& o, double q) {
    fdsec_sim_config c;
    fdsec_sim_config_default(&c);
    c.trials = o.trials;
    c.seed = o.seed;
    c.workers = o.workers;
    c.mode = FDSEC_FD;
    c.q = q;
    return c;
}

std::optional<double> q_of(const fdsec_opt_result& r) {
    return r.has_q ? std::optional<double>(r.q_star) : std::nullopt;
}

std::optional<std::uint64_t> mc_trials(const PresetOptions& o) {
    return o.trials > 0 ? std::optional<std::uint64_t>(o.trials) : std::nullopt;
}

std::optional<std::uint64_t> mc_seed(const PresetOptions& o) {
    return o.trials > 0 ? std::optional<std::uint64_t>(o.seed) : std::nullopt;
}

CsvTable fig1(const PresetOptions& o) {
    CsvTable t;
    const double tau_t = 1.0;
    for (double eta : {0.0, 0.1, 1.0}) {
        const auto net = network(4.0, 3e-3, 0.0, 1, 1.0, 1.0, eta);
        const auto p = make_params(net);
        for (double q : linspace(0.0, 1.0, 20)) {
            double upper = 0.0;
            double lower = 0.0;
            check(fdsec_pco_bounds(p.get(), FDSEC_FD, q, tau_t, &upper, &lower));
            const double exact = value_of(fdsec_pco_exact, p.get(), FDSEC_FD, q, tau_t,
                                          static_cast<const fdsec_quadrature*>(nullptr));
            std::optional<double> mc;
            std::optional<double> se;
            if (o.trials > 0) {
                const auto cfg = sim_config(o, q);
                fdsec_estimate est{};
                check(fdsec_estimate_pco(p.get(), &cfg, tau_t, &est));
                mc = est.p_hat;
                se = est.std_err;
            }
            Row row{{"q", q},           {"eta", eta},           {"pco_exact", exact},
                    {"pco_upper", upper}, {"pco_lower", lower}, {"pco_mc", mc},
                    {"pco_mc_stderr", se}};
            append_params(row, {net, tau_t, {}, {}, {}, {}, "fd", mc_trials(o), mc_seed(o)});
            t.add(row);
        }
    }
    return t;
}

// All receivers jam (q = 1) so lambda_l is the jammer density lambda_f.
CsvTable fig2(const PresetOptions& o) {
    CsvTable t;
    const double tau_e = 1.0;
    const double q = 1.0;
    for (double r_o : {0.05, 0.5}) {
        for (double lambda_f : {1e-3, 1e-2}) {
            for (double lambda_e : logspace(-4, -2, 4)) {
                const auto net = network(4.0, lambda_f, lambda_e, 2, r_o, 10.0, 0.0);
                const auto p = make_params(net);
                const double upper = value_of(fdsec_pso_upper, p.get(), FDSEC_FD, q, tau_e,
                                              static_cast<const fdsec_quadrature*>(nullptr));
                const double approx = value_of(fdsec_pso_fd_approx, p.get(), q, tau_e);
                std::optional<double> mc;
                std::optional<double> se;
                if (o.trials > 0) {
                    const auto cfg = sim_config(o, q);
                    fdsec_estimate est{};
                    check(fdsec_estimate_pso(p.get(), &cfg, tau_e, &est));
                    mc = est.p_hat;
                    se = est.std_err;
                }
                Row row{{"lambda_e", lambda_e},    {"r_o", r_o},
                        {"lambda_f", lambda_f},    {"q", q},
                        {"pso_upper", upper},      {"pso_fd_approx", approx},
                        {"pso_mc", mc},            {"pso_mc_stderr", se}};
                append_params(row, {net, {}, tau_e, {}, {}, {}, "fd", mc_trials(o), mc_seed(o)});
                t.add(row);
            }
        }
    }
    return t;
}

CsvTable fig3(const PresetOptions& o) {
    CsvTable t;
    const double tau_t = 2.0;
    const double tau_e = 1.0;
    for (double r_o : {1.0, 2.0}) {
        for (double rho : {1.0, 10.0}) {
            for (double lambda_l : logspace(-4, -1, 4)) {
                const auto net = network(4.0, lambda_l, 1e-3, 6, r_o, rho, db(-10.0));
                const auto p = make_params(net);
                fdsec_opt_result r{};
                check(fdsec_optimize_asln(p.get(), tau_t, tau_e, o.tol, &r));
                Row row{{"lambda_l", lambda_l},
                        {"r_o", r_o},
                        {"rho", rho},
                        {"q_star", q_of(r)},
                        {"asln_max", r.objective},
                        {"case_tag", fdsec_case_string(r.case_tag)},
                        {"residual", r.residual}};
                append_params(row, {net, tau_t, tau_e, {}, {}, {}, "", {}, {}});
                t.add(row);
            }
        }
    }
    return t;
}

CsvTable fig4(const PresetOptions& o) {
    CsvTable t;
    const double tau_t = 2.0;
    const double tau_e = 1.0;
    for (double rho : {1.0, 10.0}) {
        for (int n_e = 1; n_e <= 10; ++n_e) {
            const auto net = network(3.0, 1e-2, 1e-3, n_e, 1.0, rho, db(-7.0));
            const auto p = make_params(net);
            auto emit = [&](const char* policy, double q, double value) {
                Row row{{"n_e", n_e}, {"rho", rho}, {"policy", policy}, {"q", q}, {"asln", value}};
                append_params(row, {net, tau_t, tau_e, {}, {}, {}, "", {}, {}});
                t.add(row);
            };
            for (double q : {0.1, 0.5}) {
                emit("fixed", q, value_of(fdsec_asln, p.get(), q, tau_t, tau_e));
            }
            fdsec_opt_result r{};
            check(fdsec_optimize_asln(p.get(), tau_t, tau_e, o.tol, &r));
            emit("optimal", r.q_star, r.objective);
        }
    }
    return t;
}

CsvTable fig5(const PresetOptions& o) {
    CsvTable t;
    const double epsilon = 0.05;
    for (double r_o : {1.0, 2.0}) {
        for (double sigma : {0.1, 0.3}) {
            for (double lambda_l : logspace(-5, 0, 4)) {
                const auto net = network(4.0, lambda_l, 1e-4, 4, r_o, 2.0, 0.0);
                const auto p = make_params(net);
                const auto c = make_constraints(p.get(), sigma, epsilon);
                fdsec_opt_result r{};
                check(fdsec_optimize_nst(p.get(), c.get(), o.tol, &r));
                fdsec_constraints_info info{};
                check(fdsec_constraints_describe(c.get(), &info));
                std::optional<double> dense;
                if (info.has_q_m) {
                    dense = value_of(fdsec_nst_q_dense_limit, p.get(), c.get());
                }
                Row row{{"lambda_l", lambda_l},
                        {"r_o", r_o},
                        {"sigma", sigma},
                        {"q_star", q_of(r)},
                        {"nst_max", r.objective},
                        {"case_tag", fdsec_case_string(r.case_tag)},
                        {"residual", r.residual},
                        {"q_dense_limit", dense}};
                append_params(row, {net, {}, {}, sigma, epsilon, {}, "", {}, {}});
                t.add(row);
            }
        }
    }
    return t;
}

CsvTable fig6(const PresetOptions& o) {
    CsvTable t;
    const double epsilon = 0.01;
    for (double alpha : {3.0, 4.0, 5.0}) {
        const auto net = network(alpha, 1e-3, 1e-4, 4, 1.0, 1.0, 0.0);
        const auto p = make_params(net);
        for (double sigma : linspace(0.02, 0.5, 24)) {
            const auto c = make_constraints(p.get(), sigma, epsilon);
            auto emit = [&](const char* policy, std::optional<double> q, double value) {
                Row row{{"sigma", sigma}, {"alpha", alpha}, {"policy", policy}, {"q", q}, {"nst", value}};
                append_params(row, {net, {}, {}, sigma, epsilon, {}, "", {}, {}});
                t.add(row);
            };
            for (double q : {0.1, 0.5}) {
                emit("fixed", q, value_of(fdsec_nst, p.get(), c.get(), q));
            }
            fdsec_opt_result r{};
            check(fdsec_optimize_nst(p.get(), c.get(), o.tol, &r));
            emit("optimal", q_of(r), r.objective);
        }
    }
    return t;
}

CsvTable fig7(const PresetOptions& o) {
    CsvTable t;
    const std::pair<double, double> targets[] = {{0.2, 0.02}, {0.3, 0.02}, {0.3, 0.05}};
    for (const auto& [sigma, epsilon] : targets) {
        for (double rho : logspace(-1, 2, 4)) {
            const auto net = network(4.0, 1e-3, 1e-4, 4, 1.0, rho, 0.0);
            const auto p = make_params(net);
            const auto c = make_constraints(p.get(), sigma, epsilon);
            fdsec_opt_result r{};
            check(fdsec_optimize_nsee(p.get(), c.get(), o.tol, &r));
            Row row{{"rho", rho},
                    {"sigma", sigma},
                    {"epsilon", epsilon},
                    {"q_star", q_of(r)},
                    {"nsee_max", r.objective},
                    {"case_tag", fdsec_case_string(r.case_tag)},
                    {"residual", r.residual}};
            append_params(row, {net, {}, {}, sigma, epsilon, {}, "", {}, {}});
            t.add(row);
        }
    }
    return t;
}

CsvTable nsee_vs_rho(const PresetOptions& o) {
    CsvTable t;
    const double sigma = 0.3;
    const double epsilon = 0.02;
    for (double rho : logspace(-1, 2, 8)) {
        const auto net = network(4.0, 1e-3, 1e-4, 4, 1.0, rho, 0.0);
        const auto p = make_params(net);
        const auto c = make_constraints(p.get(), sigma, epsilon);
        auto emit = [&](const char* policy, std::optional<double> q, double value) {
            Row row{{"rho", rho}, {"policy", policy}, {"q", q}, {"nsee", value}};
            append_params(row, {net, {}, {}, sigma, epsilon, {}, "", {}, {}});
            t.add(row);
        };
        for (double q : {0.1, 0.5, 1.0}) {
            emit("fixed", q, value_of(fdsec_nsee, p.get(), c.get(), q));
        }
        fdsec_opt_result r{};
        check(fdsec_optimize_nsee(p.get(), c.get(), o.tol, &r));
        emit("optimal", q_of(r), r.objective);
    }
    return t;
}

CsvTable fig8(const PresetOptions& o) {
    CsvTable t;
    const double sigma = 0.3;
    const double epsilon = 0.03;
    const double omega_min = 1e-3;
    for (double rho : {1.0, 10.0}) {
        for (int n_e : {2, 4}) {
            for (double lambda_l : logspace(-6, -1, 4)) {
                const auto net = network(4.0, lambda_l, 1e-4, n_e, 1.0, rho, 0.0);
                const auto p = make_params(net);
                const auto c = make_constraints(p.get(), sigma, epsilon);
                fdsec_opt_result free{};
                fdsec_opt_result gated{};
                check(fdsec_optimize_nsee(p.get(), c.get(), o.tol, &free));
                check(fdsec_optimize_nsee_constrained(p.get(), c.get(), omega_min, o.tol, &gated));
                Row row{{"lambda_l", lambda_l},
                        {"rho", rho},
                        {"n_e", n_e},
                        {"q_ee", q_of(free)},
                        {"nsee_max", free.objective},
                        {"case_tag", fdsec_case_string(free.case_tag)},
                        {"q_ee_constrained", q_of(gated)},
                        {"nsee_max_constrained", gated.objective},
                        {"case_tag_constrained", fdsec_case_string(gated.case_tag)}};
                append_params(row, {net, {}, {}, sigma, epsilon, omega_min, "", {}, {}});
                t.add(row);
            }
        }
    }
    return t;
}

using PresetFn = std::function<CsvTable(const PresetOptions&)>;

const std::map<std::string, PresetFn>& registry() {
    static const std::map<std::string, PresetFn> presets{
        {"fig1", fig1}, {"fig2", fig2}, {"fig3", fig3}, {"fig4", fig4},
        {"fig5", fig5}, {"fig6", fig6}, {"fig7", fig7}, {"fig8", fig8},
        {"nsee_vs_rho", nsee_vs_rho},
    };
    return presets;
}

}  // namespace

const std::vector<std::string>& preset_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& [name, fn] : registry()) {
            n.push_back(name);
        }
        return n;
    }();
    return names;
}

CsvTable run_preset(const std::string& name, const PresetOptions& opts) {
    const auto it = registry().find(name);
    if (it == registry().end()) {
        std::string known;
        for (const auto& n : preset_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw ConfigError("unknown preset '" + name + "' (known: " + known + ")");
    }
    return it->second(opts);
}

}  // namespace fdsec_cli
