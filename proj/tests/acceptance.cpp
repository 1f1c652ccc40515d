// Acceptance run: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <boost/multiprecision/cpp_dec_float.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "fdsec/analytic_outage.hpp"
#include "fdsec/metrics.hpp"
#include "fdsec/optimizer.hpp"
#include "fdsec/simulator.hpp"
#include "support.hpp"

using namespace fdsec;
using fdsec::testing::log_uniform;
using fdsec::testing::network;
using fdsec::testing::uniform;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt2(const char* f, double a, double b) {
    char buf[192];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

// 1. Monte Carlo connection outage against the exact expression.
Outcome mc_connection() {
    int bad = 0;
    double worst = 0.0;
    for (double eta : {0.0, 0.1, 1.0}) {
        const auto p = network(4.0, 3e-3, 0.0, 1, 1.0, 1.0, eta);
        for (double q : {0.0, 0.25, 0.5, 0.75, 1.0}) {
            SimulationConfig cfg;
            cfg.trials = 100000;
            cfg.seed = 1;
            cfg.q = q;
            cfg.mode = DuplexMode::FD;
            const auto est = estimate_pco(p, cfg, 1.0);
            const double exact = pco_exact(p, DuplexMode::FD, q, 1.0);
            const double z = std::abs(est.p_hat - exact) / est.std_err;
            worst = std::max(worst, z);
            if (z > 3.0) {
                ++bad;
                std::cerr << "  eta=" << eta << " q=" << q << " mc=" << est.p_hat << " exact=" << exact
                          << " se=" << est.std_err << "\n";
            }
        }
    }
    return {bad == 0, std::to_string(bad) + " of 15 points outside 3 se, worst " + fmt("%.2f se", worst)};
}

// 2. Bounds sandwich on a randomized grid.
Outcome sandwich() {
    std::mt19937_64 rng(2);
    int bad = 0;
    double worst = -INFINITY;
    for (int i = 0; i < 500; ++i) {
        const auto p = network(uniform(rng, 2.2, 6.0), log_uniform(rng, 1e-5, 1e-1), 0.0, 1,
                               uniform(rng, 0.1, 5.0), log_uniform(rng, 0.01, 100.0), uniform(rng, 0.0, 1.0));
        const DuplexMode mode = (i % 2) ? DuplexMode::FD : DuplexMode::HD;
        const double q = uniform(rng, 0.0, 1.0);
        const double tau = log_uniform(rng, 0.01, 100.0);
        const double ex = pco_exact(p, mode, q, tau);
        const auto b = pco_bounds(p, mode, q, tau);
        const double v = std::max(b.lower - ex, ex - b.upper);
        worst = std::max(worst, v);
        if (v > 1e-9) {
            ++bad;
        }
    }
    return {bad == 0, std::to_string(bad) + " violations, largest excursion " + fmt("%.3g", worst)};
}

// 3. HD secrecy quadrature against its closed form.
Outcome secrecy_closed_form() {
    std::mt19937_64 rng(3);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto p = network(uniform(rng, 2.2, 6.0), log_uniform(rng, 1e-4, 1e-1), log_uniform(rng, 1e-5, 1e-2),
                               1 + static_cast<int>(rng() % 8), uniform(rng, 0.1, 3.0), log_uniform(rng, 0.1, 100.0));
        const double q = uniform(rng, 0.01, 1.0);
        const double tau = log_uniform(rng, 0.1, 10.0);
        const double a = pso_upper(p, DuplexMode::HD, q, tau);
        const double b = pso_hd_closed(p, q, tau);
        worst = std::max(worst, std::abs(a - b) / std::max(std::abs(b), 1e-300));
    }
    return {worst <= 1e-6, "max relative difference " + fmt("%.3g", worst)};
}

// 4. Monte Carlo secrecy outage below the analytic bound, and the small-r_o approximation.
Outcome mc_secrecy() {
    int bad = 0;
    int approx_bad = 0;
    double worst = -INFINITY;
    for (double lf : {1e-3, 1e-2}) {
        double err[2];
        int k = 0;
        for (double r_o : {0.05, 0.5}) {
            const auto p = network(4.0, lf, 1e-3, 2, r_o, 10.0);
            SimulationConfig cfg;
            cfg.trials = 100000;
            cfg.seed = 1;
            cfg.q = 1.0;
            cfg.mode = DuplexMode::FD;
            const auto est = estimate_pso(p, cfg, 1.0);
            const double up = pso_upper(p, DuplexMode::FD, 1.0, 1.0);
            const double z = (est.p_hat - up) / est.std_err;
            worst = std::max(worst, z);
            if (est.p_hat > up + 3.0 * est.std_err) {
                ++bad;
                std::cerr << "  lambda_f=" << lf << " r_o=" << r_o << " mc=" << est.p_hat << " bound=" << up
                          << " se=" << est.std_err << "\n";
            }
            err[k++] = std::abs(pso_fd_approx(p, 1.0, 1.0) - up);
        }
        if (!(err[0] < err[1])) {
            ++approx_bad;
        }
    }
    return {bad == 0 && approx_bad == 0,
            std::to_string(bad) + " of 4 points above bound + 3 se (max excess " + fmt("%.2f se)", worst) + ", " +
                std::to_string(approx_bad) + " approximation-ordering failures"};
}

struct Instance {
    NetworkParams p;
    OutageConstraints c;
};

Instance random_feasible(std::mt19937_64& rng) {
    for (;;) {
        const auto p = network(uniform(rng, 2.5, 5.0), log_uniform(rng, 1e-5, 1e-1), log_uniform(rng, 1e-5, 1e-3),
                               1 + static_cast<int>(rng() % 6), uniform(rng, 0.3, 2.0), log_uniform(rng, 0.1, 30.0),
                               0.0, log_uniform(rng, 0.01, 10.0));
        const auto c = build_outage_constraints(p, uniform(rng, 0.05, 0.5), uniform(rng, 0.005, 0.1));
        if (c.feasible) {
            return {p, c};
        }
    }
}

// 5. Bisection against the exhaustive grid.
Outcome optimizer_vs_grid() {
    std::mt19937_64 rng(5);
    double worst_gap = 0.0;
    double worst_res = 0.0;
    int interior = 0;
    for (int i = 0; i < 100; ++i) {
        const auto p = network(uniform(rng, 2.5, 5.0), log_uniform(rng, 1e-4, 1.0), log_uniform(rng, 1e-5, 1e-2),
                               1 + static_cast<int>(rng() % 8), uniform(rng, 0.3, 2.0), log_uniform(rng, 0.1, 10.0),
                               uniform(rng, 0.0, 0.3));
        const double tt = log_uniform(rng, 0.3, 5.0);
        const double te = tt * uniform(rng, 0.1, 1.0);
        const auto r = optimize_asln(p, tt, te);
        const auto g = grid_oracle([&](double q) { return asln(p, q, tt, te); }, 1e-4, 1.0, 1e-4);
        worst_gap = std::max(worst_gap, std::abs(*r.q_star - g.q));
        worst_res = std::max(worst_res, r.residual);
        interior += r.case_tag == CaseTag::InteriorRoot;
    }
    for (int i = 0; i < 100; ++i) {
        const auto [p, c] = random_feasible(rng);
        const auto r = optimize_nst(p, c);
        const auto g = grid_oracle([&](double q) { return nst(p, c, q); }, *c.q_m, 1.0, 1e-4);
        worst_gap = std::max(worst_gap, std::abs(*r.q_star - g.q));
        worst_res = std::max(worst_res, r.residual);
        interior += r.case_tag == CaseTag::InteriorRoot;
    }
    for (int i = 0; i < 100; ++i) {
        const auto [p, c] = random_feasible(rng);
        const auto r = optimize_nsee(p, c);
        const auto g = grid_oracle([&](double q) { return nsee(p, c, q); }, *c.q_m, 1.0, 1e-4);
        worst_gap = std::max(worst_gap, std::abs(*r.q_star - g.q));
        worst_res = std::max(worst_res, r.residual);
        interior += r.case_tag == CaseTag::InteriorRoot;
    }
    return {worst_gap <= 1e-3 && worst_res <= 1e-9,
            "max |q* - grid| " + fmt("%.3g", worst_gap) + ", max residual " + fmt("%.3g", worst_res) + ", " +
                std::to_string(interior) + " of 300 interior"};
}

// 6. Closed forms: perfect-cancellation ASLN root, dense NST limit, and the Delta = 5.734 instance.
Outcome closed_forms() {
    std::mt19937_64 rng(6);
    double worst_cor2 = 0.0;
    for (int i = 0; i < 100; ++i) {
        const auto p = network(uniform(rng, 2.5, 5.0), log_uniform(rng, 1e-3, 1.0), log_uniform(rng, 1e-5, 1e-2),
                               1 + static_cast<int>(rng() % 8), uniform(rng, 0.3, 2.0), log_uniform(rng, 0.1, 10.0));
        const double tt = log_uniform(rng, 0.3, 5.0);
        const double te = tt * uniform(rng, 0.1, 1.0);
        const double expect = std::min(1.0, asln_q_closed_sic(p, tt, te));
        worst_cor2 = std::max(worst_cor2, std::abs(*optimize_asln(p, tt, te).q_star - expect));
    }

    const auto d = network(4.0, 10.0, 1e-4, 4, 1.0, 1.0);
    const auto cd = build_outage_constraints(d, 0.3, 0.02);
    const double dense_gap = std::abs(*optimize_nst(d, cd).q_star - nst_q_dense_limit(d, cd));

    using big = boost::multiprecision::cpp_dec_float_50;
    const big so = -log(big(1) - big("0.3"));
    const big eo = -log(big(1) - big("0.02"));
    const big delta = so * eo / (boost::math::constants::pi<big>() * big("1e-4") * 4);
    const double qm_ref = static_cast<double>(1 / (delta - 1));
    const double qd_ref = static_cast<double>(1 / (pow(delta, big(2) / 3) - 1));
    const auto s = network(4.0, 1e-3, 1e-4, 4, 1.0, 1.0);
    const auto cs = build_outage_constraints(s, 0.3, 0.02);
    const double qm_gap = std::max(std::abs(*cs.q_m - qm_ref), std::abs(*cs.q_m - 0.21124));
    const double qd = nst_q_dense_limit(s, cs);
    const double qd_gap = std::max(std::abs(qd - qd_ref), std::abs(qd - 0.4537));

    const bool ok = worst_cor2 <= 1e-6 && dense_gap <= 1e-2 && qm_gap <= 1e-4 && qd_gap <= 1e-4;
    return {ok, "sqrt(C/B) gap " + fmt("%.3g", worst_cor2) + ", dense-limit gap " + fmt("%.3g", dense_gap) +
                    ", q_m " + fmt2("%.8f (gap %.2g)", *cs.q_m, qm_gap) + ", dense q " +
                    fmt2("%.8f (gap %.2g)", qd, qd_gap)};
}

// 7. Direction of q* against each parameter.
struct Relation {
    std::string name;
    int sign; // +1 nondecreasing, -1 nonincreasing
    std::vector<double> values;
    std::function<double(double)> q_star;
};

NetworkInputs asln_base() {
    NetworkInputs in;
    in.alpha = 4.0;
    in.lambda_l = 0.1;
    in.lambda_e = 1e-3;
    in.n_e = 6;
    in.r_o = 1.0;
    in.p_t = 1.0;
    in.p_j = 1.0;
    in.eta = 0.1;
    in.p_c = 1.0;
    return in;
}

NetworkInputs st_base() {
    NetworkInputs in;
    in.alpha = 4.0;
    in.lambda_l = 0.1;
    in.lambda_e = 1e-4;
    in.n_e = 4;
    in.r_o = 1.0;
    in.p_t = 1.0;
    in.p_j = 2.0;
    in.eta = 0.0;
    in.p_c = 1.0;
    return in;
}

NetworkInputs ee_base() {
    NetworkInputs in = st_base();
    in.lambda_l = 1e-3;
    in.p_j = 10.0;
    return in;
}

Outcome table_monotonicity() {
    std::vector<Relation> rel;
    auto sl = [](std::function<void(NetworkInputs&, double&, double&, double)> edit) {
        return [edit](double v) {
            NetworkInputs in = asln_base();
            double tt = 2.0;
            double te = 1.0;
            edit(in, tt, te, v);
            return *optimize_asln(build_network_params(in), tt, te).q_star;
        };
    };
    rel.push_back({"q_sl vs lambda_e", +1, {2e-4, 5e-4, 1e-3, 2e-3, 4e-3},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.lambda_e = v; })});
    rel.push_back({"q_sl vs N_e", +1, {2, 4, 6, 8, 10},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.n_e = static_cast<int>(v); })});
    rel.push_back({"q_sl vs lambda_l", -1, {0.03, 0.05, 0.1, 0.2, 0.4},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.lambda_l = v; })});
    rel.push_back({"q_sl vs r_o", -1, {0.5, 0.75, 1.0, 1.25, 1.5},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.r_o = v; })});
    rel.push_back({"q_sl vs eta", -1, {0.0, 0.05, 0.1, 0.2, 0.4},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.eta = v; })});
    rel.push_back({"q_sl vs rho", -1, {0.5, 0.75, 1.0, 2.0, 4.0},
                   sl([](NetworkInputs& in, double&, double&, double v) { in.p_j = v; })});
    rel.push_back({"q_sl vs tau_t", -1, {1.0, 1.5, 2.0, 3.0, 4.0},
                   sl([](NetworkInputs&, double& tt, double&, double v) { tt = v; })});
    rel.push_back({"q_sl vs tau_e", -1, {0.25, 0.5, 1.0, 1.5, 2.0},
                   sl([](NetworkInputs&, double&, double& te, double v) { te = v; })});

    using Edit = std::function<void(NetworkInputs&, double&, double&, double)>;
    auto st = [](Edit edit) {
        return [edit](double v) {
            NetworkInputs in = st_base();
            double sigma = 0.3;
            double eps = 0.05;
            edit(in, sigma, eps, v);
            const auto p = build_network_params(in);
            return *optimize_nst(p, build_outage_constraints(p, sigma, eps)).q_star;
        };
    };
    auto ee = [](Edit edit) {
        return [edit](double v) {
            NetworkInputs in = ee_base();
            double sigma = 0.3;
            double eps = 0.02;
            edit(in, sigma, eps, v);
            const auto p = build_network_params(in);
            return *optimize_nsee(p, build_outage_constraints(p, sigma, eps)).q_star;
        };
    };
    struct Shared {
        std::string param;
        int sign;
        std::vector<double> st_values;
        std::vector<double> ee_values;
        Edit edit;
    };
    const std::vector<Shared> shared = {
        {"lambda_e", +1, {5e-5, 7e-5, 1e-4, 1.2e-4, 1.4e-4}, {5e-5, 7e-5, 1e-4, 1.2e-4, 1.4e-4},
         [](NetworkInputs& in, double&, double&, double v) { in.lambda_e = v; }},
        {"N_e", +1, {2, 3, 4, 5, 6}, {2, 3, 4, 5, 6},
         [](NetworkInputs& in, double&, double&, double v) { in.n_e = static_cast<int>(v); }},
        {"r_o", +1, {0.6, 0.8, 1.0, 1.2, 1.4}, {0.6, 0.8, 1.0, 1.1, 1.2},
         [](NetworkInputs& in, double&, double&, double v) { in.r_o = v; }},
        {"rho", -1, {1.0, 2.0, 4.0, 8.0, 16.0}, {4.0, 8.0, 10.0, 20.0, 40.0},
         [](NetworkInputs& in, double&, double&, double v) { in.p_j = v; }},
        {"sigma", -1, {0.2, 0.25, 0.3, 0.4, 0.5}, {0.2, 0.25, 0.3, 0.4, 0.5},
         [](NetworkInputs&, double& s, double&, double v) { s = v; }},
        {"epsilon", -1, {0.03, 0.04, 0.05, 0.07, 0.1}, {0.015, 0.02, 0.03, 0.05, 0.1},
         [](NetworkInputs&, double&, double& e, double v) { e = v; }},
    };
    for (const auto& s : shared) {
        rel.push_back({"q_st vs " + s.param, s.sign, s.st_values, st(s.edit)});
        rel.push_back({"q_ee vs " + s.param, s.sign, s.ee_values, ee(s.edit)});
    }
    rel.push_back({"q_st vs lambda_l", -1, {0.02, 0.05, 0.1, 0.5, 1.0},
                   st([](NetworkInputs& in, double&, double&, double v) { in.lambda_l = v; })});

    int bad = 0;
    int strict = 0;
    for (const auto& r : rel) {
        std::vector<double> qs;
        for (double v : r.values) {
            qs.push_back(r.q_star(v));
        }
        bool ok = true;
        bool moved = false;
        for (std::size_t k = 1; k < qs.size(); ++k) {
            const double step = r.sign * (qs[k] - qs[k - 1]);
            ok = ok && step >= -1e-9;
            moved = moved || step > 1e-6;
        }
        strict += moved;
        if (!ok) {
            ++bad;
            std::cerr << "  " << r.name << ":";
            for (double q : qs) {
                std::cerr << " " << q;
            }
            std::cerr << "\n";
        }
    }
    return {bad == 0, std::to_string(rel.size()) + " relations, " + std::to_string(bad) + " violated, " +
                          std::to_string(strict) + " with q* moving"};
}

// 8. Unimodality of F, w and J on dense grids.
Outcome quasi_concavity() {
    std::mt19937_64 rng(8);
    int bad = 0;
    auto check = [&](auto&& f, double lo, double hi) {
        const auto [down, up] = fdsec::testing::sign_changes(f, lo, hi, 10000);
        if (up != 0 || down > 1) {
            ++bad;
        }
    };
    for (int i = 0; i < 50; ++i) {
        const auto p = network(uniform(rng, 2.5, 5.0), log_uniform(rng, 1e-4, 1.0), log_uniform(rng, 1e-5, 1e-2),
                               1 + static_cast<int>(rng() % 8), uniform(rng, 0.3, 2.0), log_uniform(rng, 0.1, 10.0),
                               uniform(rng, 0.0, 0.3));
        const auto aux = asln_constants(p, 2.0, 1.0);
        check([&](double q) { return asln_aux(aux, q).f; }, 1e-4, 1.0);
    }
    for (int i = 0; i < 50; ++i) {
        const auto [p, c] = random_feasible(rng);
        check([&](double q) { return nst_aux(p, c, q).w; }, *c.q_m, 1.0);
    }
    for (int i = 0; i < 50; ++i) {
        const auto [p, c] = random_feasible(rng);
        check([&](double q) { return nsee_aux(p, c, q).j; }, *c.q_m, 1.0);
    }
    return {bad == 0, std::to_string(bad) + " of 150 curves with more than one turn"};
}

// 9. Sparse-density energy efficiency and the throughput gate.
Outcome sparse_and_gate() {
    double worst = 0.0;
    int gate_bad = 0;
    for (double rho : {1.0, 10.0}) {
        for (int n_e : {2, 4}) {
            const auto a = network(4.0, 1e-6, 1e-4, n_e, 1.0, rho);
            const auto b = network(4.0, 1e-7, 1e-4, n_e, 1.0, rho);
            const auto ca = build_outage_constraints(a, 0.3, 0.03);
            const auto cb = build_outage_constraints(b, 0.3, 0.03);
            const double pa = optimize_nsee(a, ca).objective;
            const double pb = optimize_nsee(b, cb).objective;
            worst = std::max(worst, pa > 0 ? std::abs(pa - pb) / pa : INFINITY);

            const double omega_max = optimize_nst(a, ca).objective;
            const auto above = optimize_nsee_constrained(a, ca, omega_max * 1.001 + 1e-300);
            const auto fig8 = optimize_nsee_constrained(a, ca, 1e-3);
            if (above.objective != 0.0 || fig8.objective != 0.0 || !(pa > 0.0)) {
                ++gate_bad;
            }
        }
    }
    return {worst <= 1e-6 && gate_bad == 0,
            "max relative change " + fmt("%.3g", worst) + ", " + std::to_string(gate_bad) + " gate failures"};
}

// 10. Byte-identical CLI output for identical seeds.
std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), {}};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const fs::path root = fs::temp_directory_path() / ("fdsec_accept_" + std::to_string(::getpid()));
    fs::remove_all(root);
    fs::create_directories(root);
    {
        std::ofstream cfg(root / "net.ini");
        cfg << "[network]\nalpha = 4\nlambda_l = 3e-3\nlambda_e = 1e-3\nn_e = 2\nr_o = 1\nrho = 1\neta = 0.1\n"
               "[rates]\ntau_t = 1\ntau_e = 1\n[grid]\nq = 0, 0.5, 1\nmode = both\n";
    }
    const std::string cli = FDSEC_CLI_PATH;
    bool ok = true;
    std::string detail;
    for (const std::string out : {"a", "b"}) {
        const std::string o = (root / out).string();
        const std::string sim = "\"" + cli + "\" simulate --config \"" + (root / "net.ini").string() +
                                "\" --trials 2000 --seed 11 --out \"" + o + "\" > /dev/null";
        const std::string sweep = "\"" + cli + "\" sweep --preset fig1 --trials 200 --seed 11 --out \"" + o +
                                  "\" > /dev/null";
        ok = ok && std::system(sim.c_str()) == 0 && std::system(sweep.c_str()) == 0;
    }
    if (!ok) {
        detail = "CLI invocation failed";
    } else {
        const auto s1 = slurp(root / "a" / "simulate.csv");
        const auto s2 = slurp(root / "b" / "simulate.csv");
        const auto f1 = slurp(root / "a" / "fig1.csv");
        const auto f2 = slurp(root / "b" / "fig1.csv");
        ok = !s1.empty() && !f1.empty() && s1 == s2 && f1 == f2;
        detail = "simulate.csv " + std::to_string(s1.size()) + " bytes " + (s1 == s2 ? "identical" : "DIFFERENT") +
                 ", fig1.csv " + std::to_string(f1.size()) + " bytes " + (f1 == f2 ? "identical" : "DIFFERENT");
    }
    fs::remove_all(root);
    return {ok, detail};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"MC connection outage within 3 se of the exact value", mc_connection},
        {"bounds sandwich the exact connection outage", sandwich},
        {"HD secrecy quadrature equals the closed form", secrecy_closed_form},
        {"MC secrecy outage under the bound; small-r_o approximation ordering", mc_secrecy},
        {"bisection matches the grid oracle", optimizer_vs_grid},
        {"closed-form optima and constraint constants", closed_forms},
        {"q* monotone in each parameter", table_monotonicity},
        {"objectives are unimodal", quasi_concavity},
        {"sparse-network efficiency and throughput gate", sparse_and_gate},
        {"identical seeds give byte-identical CSV", determinism},
    };
    // Optional: run a single criterion by number.
    const int only = argc > 1 ? std::atoi(argv[1]) : 0;
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only != 0 && static_cast<int>(i + 1) != only) {
            continue;
        }
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
                  << o.detail << " [" << fmt("%.1fs", secs) << "]" << std::endl;
        failed += !o.pass;
    }
    return failed == 0 ? 0 : 1;
}
