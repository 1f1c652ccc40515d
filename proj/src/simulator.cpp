#include "fdsec/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "fdsec/errors.hpp"
#include "fdsec/quadrature.hpp"
#include "fdsec/random.hpp"

namespace fdsec {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * std::numbers::pi;
constexpr double kRcondFloor = 1e-12;

double dist_sq(Point a, Point b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

/// Jamming reach coefficient c of the secrecy bound; 0 when nobody jams.
double jamming_coefficient(const NetworkParams& p, double q, double tau_e) {
    return p.kappa() * q * p.lambda_l() * p.rho_delta() * std::pow(tau_e, p.delta());
}

double uncapped_eavesdropper_radius(const NetworkParams& p, double q, double tau_e) {
    const double c = jamming_coefficient(p, q, tau_e);
    if (!(c > 0.0)) {
        return std::numeric_limits<double>::infinity();
    }
    return std::sqrt(TailCut{}.at(p.n_e() - 1) / c) + p.r_o();
}

/// (d^2)^(-half_alpha) with fast paths for alpha = 4 and alpha = 3.
double path_gain(double d_sq, double half_alpha) {
    if (half_alpha == 2.0) {
        return 1.0 / (d_sq * d_sq);
    }
    if (half_alpha == 1.5) {
        return 1.0 / (d_sq * std::sqrt(d_sq));
    }
    return std::pow(d_sq, -half_alpha);
}

/// One CN(0, 1) sample per block via Box-Muller, E|g|^2 = 1.
std::complex<double> complex_normal(const CounterRng& rng, std::uint32_t block) {
    const auto [u1, u2] = rng.uniforms(block);
    const double mag = std::sqrt(-std::log(u1));
    return {mag * std::cos(two_pi * u2), mag * std::sin(two_pi * u2)};
}

unsigned worker_count(unsigned requested, std::uint64_t trials) {
    unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
    return static_cast<unsigned>(std::min<std::uint64_t>(n, trials));
}

struct Tally {
    std::uint64_t hits = 0;
    std::uint64_t ill = 0;
};

/// Runs trial_fn over [0, trials) split into contiguous ranges, one per worker.
/// Integer counts make the sum independent of the split.
template <class TrialFn>
OutageEstimate run_trials(const SimulationConfig& cfg, TrialFn trial_fn) {
    const unsigned workers = worker_count(cfg.workers, cfg.trials);
    std::vector<Tally> tallies(workers);
    auto work = [&](unsigned w) {
        const std::uint64_t begin = cfg.trials * w / workers;
        const std::uint64_t end = cfg.trials * (w + 1) / workers;
        Tally t;
        for (std::uint64_t i = begin; i < end; ++i) {
            trial_fn(TrialKey{cfg.seed, i}, t);
        }
        tallies[w] = t;
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
        for (auto& th : pool) {
            th.join();
        }
    }
    Tally total;
    for (const auto& t : tallies) {
        total.hits += t.hits;
        total.ill += t.ill;
    }
    OutageEstimate est;
    est.trials = cfg.trials;
    est.p_hat = static_cast<double>(total.hits) / static_cast<double>(cfg.trials);
    est.std_err = std::sqrt(est.p_hat * (1.0 - est.p_hat) / static_cast<double>(cfg.trials));
    est.ill_conditioned = total.ill;
    return est;
}

}  // namespace

double default_window_radius(const NetworkParams& p, double q, std::optional<double> tau_e) {
    double radius = std::max(100.0 * p.r_o(), 8.0 / std::sqrt(p.lambda_l()));
    if (tau_e && p.lambda_e() > 0.0 && q > 0.0 && p.rho() > 0.0) {
        const double reach = uncapped_eavesdropper_radius(p, q, *tau_e);
        radius = std::max(radius, reach + 8.0 / std::sqrt(q * p.lambda_l()));
    }
    return radius;
}

double default_eavesdropper_radius(const NetworkParams& p, double q, double tau_e,
                                   double window_radius) {
    return std::min(uncapped_eavesdropper_radius(p, q, tau_e), window_radius);
}

SimulationConfig resolve(const NetworkParams& p, SimulationConfig cfg, std::optional<double> tau_e) {
    if (!(cfg.q >= 0.0 && cfg.q <= 1.0)) {
        throw DomainError("q must lie in [0, 1]");
    }
    if (cfg.trials < 1) {
        throw DomainError("trials must be at least 1");
    }
    if (tau_e && !(*tau_e > 0.0)) {
        throw DomainError("tau_e must be positive");
    }
    if (cfg.window_radius == 0.0) {
        cfg.window_radius = default_window_radius(p, cfg.q, tau_e);
    }
    if (!(cfg.window_radius >= 20.0 * p.r_o()) || !std::isfinite(cfg.window_radius)) {
        throw DomainError("window_radius must be at least 20 r_o");
    }
    if (!tau_e || p.lambda_e() == 0.0) {
        cfg.eavesdropper_radius = 0.0;
    } else if (cfg.eavesdropper_radius == 0.0) {
        cfg.eavesdropper_radius = default_eavesdropper_radius(p, cfg.q, *tau_e, cfg.window_radius);
    } else if (!(cfg.eavesdropper_radius > 0.0) || !std::isfinite(cfg.eavesdropper_radius)) {
        throw DomainError("eavesdropper_radius must be positive");
    }
    return cfg;
}

std::size_t NetworkRealization::hd_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(links.begin(), links.end(), [](const auto& l) { return !l.full_duplex; }));
}

std::size_t NetworkRealization::fd_count() const noexcept { return links.size() - hd_count(); }

std::vector<Point> NetworkRealization::hd_receivers() const {
    std::vector<Point> out;
    for (const auto& l : links) {
        if (!l.full_duplex) {
            out.push_back(l.receiver);
        }
    }
    return out;
}

std::vector<Point> NetworkRealization::fd_receivers() const {
    std::vector<Point> out;
    for (const auto& l : links) {
        if (l.full_duplex) {
            out.push_back(l.receiver);
        }
    }
    return out;
}

NetworkRealization sample_network(const NetworkParams& p, const SimulationConfig& cfg, TrialKey key) {
    NetworkRealization net;
    net.typical_transmitter = {p.r_o(), 0.0};

    // Radial construction: pi lambda r_k^2 are the arrival times of a unit-rate
    // Poisson process on the line.
    const CounterRng rx(key.seed, key.trial, Stream::Receivers);
    const double area_rate = pi * p.lambda_l();
    double arrival = 0.0;
    for (std::uint32_t k = 0;; ++k) {
        const auto [u_gap, u_angle] = rx.uniforms(2 * k);
        arrival += CounterRng::exponential(u_gap);
        const double r = std::sqrt(arrival / area_rate);
        if (r > cfg.window_radius) {
            break;
        }
        const auto [u_thin, u_disp] = rx.uniforms(2 * k + 1);
        const double a = two_pi * u_angle;
        const double b = two_pi * u_disp;
        const Point receiver{r * std::cos(a), r * std::sin(a)};
        const Point transmitter{receiver.x + p.r_o() * std::cos(b), receiver.y + p.r_o() * std::sin(b)};
        net.links.push_back({receiver, transmitter, u_thin < cfg.q, k});
    }

    if (p.lambda_e() > 0.0 && cfg.eavesdropper_radius > 0.0) {
        const CounterRng ev(key.seed, key.trial, Stream::Eavesdroppers);
        const double eve_rate = pi * p.lambda_e();
        arrival = 0.0;
        for (std::uint32_t e = 0;; ++e) {
            const auto [u_gap, u_angle] = ev.uniforms(e);
            arrival += CounterRng::exponential(u_gap);
            const double r = std::sqrt(arrival / eve_rate);
            if (r > cfg.eavesdropper_radius) {
                break;
            }
            const double a = two_pi * u_angle;
            net.eavesdroppers.push_back({r * std::cos(a), r * std::sin(a)});
        }
    }
    return net;
}

double simulate_sir_typical(const NetworkParams& p, const NetworkRealization& net, DuplexMode mode,
                            TrialKey key) {
    const CounterRng fading(key.seed, key.trial, Stream::Fading);
    const double half_alpha = 0.5 * p.alpha();
    const Point origin{0.0, 0.0};

    double interference = 0.0;
    for (const auto& l : net.links) {
        const auto [u_tx, u_jam] = fading.uniforms(l.index + 1);
        interference += p.p_t() * CounterRng::exponential(u_tx) *
                        path_gain(dist_sq(l.transmitter, origin), half_alpha);
        if (l.full_duplex) {
            interference += p.p_j() * CounterRng::exponential(u_jam) *
                            path_gain(dist_sq(l.receiver, origin), half_alpha);
        }
    }
    if (is_full_duplex(mode)) {
        interference += p.eta() * p.p_j();
    }
    const double h = CounterRng::exponential(fading.uniforms(0).first);
    const double signal = p.p_t() * h * path_gain(p.r_o() * p.r_o(), half_alpha);
    if (interference == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return signal / interference;
}

MmseResult mmse_sir(const Eigen::VectorXcd& g, double signal_power, const Eigen::MatrixXcd& r) {
    const Eigen::LDLT<Eigen::MatrixXcd> ldlt(r);
    // LDLT solves through zero pivots as a pseudo-inverse and its rcond() estimate
    // misses them, so the pivot spread is checked as well.
    const Eigen::VectorXd pivots = ldlt.vectorD().real().cwiseAbs();
    const bool degenerate = !(pivots.minCoeff() >= kRcondFloor * pivots.maxCoeff()) ||
                            !(pivots.maxCoeff() > 0.0);
    if (ldlt.info() != Eigen::Success || degenerate || !(ldlt.rcond() >= kRcondFloor)) {
        return {std::numeric_limits<double>::infinity(), true};
    }
    const Eigen::VectorXcd x = ldlt.solve(g);
    const double sir = signal_power * g.dot(x).real();
    if (!std::isfinite(sir)) {
        throw NumericalError("MMSE solve produced a non-finite SIR");
    }
    return {sir, false};
}

Eigen::VectorXcd eavesdropper_channel(TrialKey key, std::uint32_t eavesdropper, std::uint32_t slot,
                                      int n_e) {
    const CounterRng rng(key.seed, key.trial, Stream::EveChannels, eavesdropper);
    Eigen::VectorXcd g(n_e);
    const auto base = static_cast<std::uint32_t>(slot * static_cast<std::uint32_t>(n_e));
    for (int j = 0; j < n_e; ++j) {
        g[j] = complex_normal(rng, base + static_cast<std::uint32_t>(j));
    }
    return g;
}

MmseResult simulate_eavesdropper_sir(const NetworkParams& p, const NetworkRealization& net,
                                     DuplexMode mode, std::uint32_t eavesdropper, TrialKey key) {
    const int n = p.n_e();
    const Point eve = net.eavesdroppers.at(eavesdropper);
    const bool typical_jams = is_full_duplex(mode);
    const std::size_t jammers = net.fd_count() + (typical_jams ? 1 : 0);
    if (jammers < static_cast<std::size_t>(n)) {
        return {std::numeric_limits<double>::infinity(), false};
    }

    const double half_alpha = 0.5 * p.alpha();
    const CounterRng rng(key.seed, key.trial, Stream::EveChannels, eavesdropper);
    // Lower triangle of R, column-major, accumulated without temporaries.
    Eigen::MatrixXcd r = Eigen::MatrixXcd::Zero(n, n);
    std::vector<std::complex<double>> g(static_cast<std::size_t>(n));
    auto add_jammer = [&](Point where, std::uint32_t slot) {
        const double gain = p.p_j() * path_gain(dist_sq(eve, where), half_alpha);
        const auto base = slot * static_cast<std::uint32_t>(n);
        for (int j = 0; j < n; ++j) {
            g[j] = complex_normal(rng, base + static_cast<std::uint32_t>(j));
        }
        for (int col = 0; col < n; ++col) {
            const std::complex<double> gc = gain * std::conj(g[col]);
            for (int row = col; row < n; ++row) {
                r(row, col) += g[row] * gc;
            }
        }
    };
    if (typical_jams) {
        add_jammer({0.0, 0.0}, 1);
    }
    for (const auto& l : net.links) {
        if (l.full_duplex) {
            add_jammer(l.receiver, 2 + l.index);
        }
    }
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            r(row, col) = std::conj(r(col, row));
        }
    }
    const Eigen::VectorXcd g0 = eavesdropper_channel(key, eavesdropper, 0, n);
    const double signal = p.p_t() * path_gain(dist_sq(eve, net.typical_transmitter), half_alpha);
    return mmse_sir(g0, signal, r);
}

OutageEstimate estimate_pco(const NetworkParams& p, const SimulationConfig& config, double tau_t) {
    if (!(tau_t >= 0.0)) {
        throw DomainError("tau_t must be non-negative");
    }
    const SimulationConfig cfg = resolve(p, config, std::nullopt);
    return run_trials(cfg, [&](TrialKey key, Tally& t) {
        const NetworkRealization net = sample_network(p, cfg, key);
        if (simulate_sir_typical(p, net, cfg.mode, key) < tau_t) {
            ++t.hits;
        }
    });
}

OutageEstimate estimate_pso(const NetworkParams& p, const SimulationConfig& config, double tau_e) {
    const SimulationConfig cfg = resolve(p, config, tau_e);
    if (p.lambda_e() == 0.0) {
        OutageEstimate est;
        est.trials = cfg.trials;
        return est;
    }
    return run_trials(cfg, [&](TrialKey key, Tally& t) {
        const NetworkRealization net = sample_network(p, cfg, key);
        for (std::uint32_t e = 0; e < net.eavesdroppers.size(); ++e) {
            const MmseResult m = simulate_eavesdropper_sir(p, net, cfg.mode, e, key);
            if (m.ill_conditioned) {
                ++t.ill;
            }
            if (m.sir >= tau_e) {
                ++t.hits;
                break;
            }
        }
    });
}

}  // namespace fdsec
