#include "fdsec/analytic_outage.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdsec/errors.hpp"

namespace fdsec {

namespace {

constexpr double pi = std::numbers::pi;

void check_fraction(double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("q must lie in [0, 1]");
    }
}

void check_threshold(double tau, const char* name) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError(std::string(name) + " must be positive");
    }
}

double inner_tol(const QuadratureSpec& quad) { return std::max(quad.rel_tol * 0.1, 1e-13); }

/// Squared distance between a point at polar (v, theta) and the point (r, 0).
double offset_distance_sq(double v, double r, double theta) {
    const double s = std::sin(0.5 * theta);
    return (v - r) * (v - r) + 4.0 * v * r * s * s;
}

/// Secrecy-outage exponent written with the gamma kernel u^k e^-u / k!.
double gamma_kernel(int k, double u) {
    if (k == 0) {
        return std::exp(-u);
    }
    if (u <= 0.0) {
        return 0.0;
    }
    return std::exp(k * std::log(u) - u - std::lgamma(k + 1.0));
}

double hd_exponent(const NetworkParams& p, double q, double tau_t) {
    return p.kappa() * (1.0 - q) * p.lambda_l() * p.r_o() * p.r_o() * std::pow(tau_t, p.delta());
}

double self_interference_exponent(const NetworkParams& p, DuplexMode mode, double tau_t) {
    if (!is_full_duplex(mode)) {
        return 0.0;
    }
    return p.rho() * p.eta() * std::pow(p.r_o(), p.alpha()) * tau_t;
}

}  // namespace

double fd_pair_overlap(const NetworkParams& params, double tau_t, const QuadratureSpec& quad) {
    validate(quad);
    check_threshold(tau_t, "tau_t");
    if (params.rho() == 0.0) {
        return 0.0;
    }
    const double half_alpha = 0.5 * params.alpha();
    const double rho_tau = params.rho() * tau_t;

    // Lengths in units of r_o: the jammer sits at distance x from the typical
    // receiver, its transmitter at distance d from it. The result scales by r_o^2.
    // The transmitter term peaks where d is within tau_t^(1/alpha) of zero, i.e. x near 1
    // and theta near 0; the jammer term has its knee at x = (rho tau_t)^(1/alpha).
    const double width = std::pow(tau_t, 1.0 / params.alpha());
    const double knee = std::pow(rho_tau, 1.0 / params.alpha());
    auto inner = [&](double x) {
        auto integrand = [&](double theta) {
            const double d_sq = offset_distance_sq(x, 1.0, theta);
            return 1.0 / (1.0 + std::pow(d_sq, half_alpha) / tau_t);
        };
        const double spread = std::max(std::abs(x - 1.0), width) / std::sqrt(x);
        const double tx = integrate_graded(integrand, 0.0, pi, {{0.0, spread}}, inner_tol(quad),
                                           quad.max_panels, "fd_pair_overlap (angle)");
        const double jam = 1.0 / (1.0 + std::pow(x, params.alpha()) / rho_tau);
        return 2.0 * tx * jam * x;
    };
    auto near = [&](double x) { return x > 0.0 ? inner(x) : 0.0; };
    // Beyond x = 2, x = t / (1 - t) maps [2/3, 1) onto [2, inf).
    auto outer = [&](double t) {
        if (t >= 1.0) {
            return 0.0;
        }
        const double one_minus = 1.0 - t;
        return inner(t / one_minus) / (one_minus * one_minus);
    };
    const double lower = integrate_graded(near, 0.0, 2.0, {{1.0, width}, {0.0, knee}}, quad.rel_tol,
                                          quad.max_panels, "fd_pair_overlap");
    const double upper = integrate(outer, 2.0 / 3.0, 1.0, quad.rel_tol, quad.max_panels, "fd_pair_overlap");
    return (lower + upper) * params.r_o() * params.r_o();
}

double pco_exact(const NetworkParams& params, DuplexMode mode, double q, double tau_t,
                 const QuadratureSpec& quad) {
    check_fraction(q);
    check_threshold(tau_t, "tau_t");
    validate(quad);

    double exponent = self_interference_exponent(params, mode, tau_t) + hd_exponent(params, q, tau_t);
    if (q > 0.0) {
        const double independent = params.kappa() * params.r_o() * params.r_o() *
                                   std::pow(tau_t, params.delta()) * (1.0 + params.rho_delta());
        exponent += q * params.lambda_l() * (independent - fd_pair_overlap(params, tau_t, quad));
    }
    return -std::expm1(-exponent);
}

PcoBounds pco_bounds(const NetworkParams& params, DuplexMode mode, double q, double tau_t) {
    check_fraction(q);
    check_threshold(tau_t, "tau_t");
    const double self = self_interference_exponent(params, mode, tau_t);
    const double base = params.kappa() * params.r_o() * params.r_o() *
                        std::pow(tau_t, params.delta()) * params.lambda_l();
    const double d = params.delta();
    const double upper_slope = params.rho_delta();
    const double lower_slope = 0.5 * ((1.0 + d) * params.rho_delta() - (1.0 - d));
    return PcoBounds{-std::expm1(-(self + base * (1.0 + upper_slope * q))),
                     -std::expm1(-(self + base * (1.0 + lower_slope * q)))};
}

double pso_upper(const NetworkParams& params, DuplexMode mode, double q, double tau_e,
                 const QuadratureSpec& quad) {
    check_fraction(q);
    check_threshold(tau_e, "tau_e");
    validate(quad);
    if (params.lambda_e() == 0.0) {
        return 0.0;
    }
    const double c = params.kappa() * q * params.lambda_l() * params.rho_delta() *
                     std::pow(tau_e, params.delta());
    if (c == 0.0) {
        return 1.0;
    }

    const double jam_ratio = is_full_duplex(mode) ? params.rho() * tau_e : 0.0;
    const double half_alpha = 0.5 * params.alpha();
    const double r_o = params.r_o();
    const double jam_width = jam_ratio > 0.0 ? std::pow(jam_ratio, 1.0 / params.alpha()) : 1.0;

    // Angular average of Lambda_i at transmitter-eavesdropper distance v, where
    // x = jam_ratio * (v / d)^alpha and d is the eavesdropper-receiver distance.
    auto lambda_bar = [&](int i, double v) {
        auto integrand = [&](double theta) {
            const double d_pow = std::pow(offset_distance_sq(v, r_o, theta), half_alpha);
            const double jam = jam_ratio * std::pow(v * v, half_alpha);
            const double denom = d_pow + jam;
            if (denom == 0.0) {
                return i == 0 ? 1.0 : 0.0;
            }
            return (i == 0 ? d_pow : jam) / denom;
        };
        // Lambda_i turns over where d^alpha meets the jamming term, near theta = 0.
        const double spread = std::max(std::abs(v - r_o), jam_width * v) / std::sqrt(v * r_o);
        return 2.0 * integrate_graded(integrand, 0.0, pi, {{0.0, spread}}, inner_tol(quad),
                                      quad.max_panels, "pso_upper (angle)");
    };

    double total = 0.0;
    for (int n = 0; n < params.n_e(); ++n) {
        for (int i = 0; i <= std::min(n, 1); ++i) {
            if (i > 0 && jam_ratio == 0.0) {
                continue;  // Lambda_i vanishes identically for an HD link
            }
            const int k = n - i;
            // u = c v^2 turns the weight v^2k e^{-c v^2} v dv into the gamma kernel.
            auto outer = [&](double u) { return lambda_bar(i, std::sqrt(u / c)) * gamma_kernel(k, u); };
            const double u_max = quad.tail_cut.at(k);
            // Lambda_bar changes on the scale of the pair distance, u = c r_o^2, and
            // relaxes like r_o / v beyond it: geometric panels from there on.
            double lo = 0.0;
            double hi = std::min(c * r_o * r_o, u_max);
            double xi = 0.0;
            while (lo < u_max) {
                xi += integrate(outer, lo, hi, quad.rel_tol, quad.max_panels, "pso_upper");
                lo = hi;
                hi = std::min(4.0 * hi, u_max);
            }
            total += xi / (2.0 * c);
        }
    }
    return -std::expm1(-params.lambda_e() * total);
}

double pso_hd_closed(const NetworkParams& params, double q, double tau_e) {
    check_fraction(q);
    check_threshold(tau_e, "tau_e");
    if (params.lambda_e() == 0.0) {
        return 0.0;
    }
    const double denom = params.kappa() * q * params.lambda_l() * params.rho_delta() *
                         std::pow(tau_e, params.delta());
    if (denom == 0.0) {
        return 1.0;
    }
    return -std::expm1(-pi * params.lambda_e() * params.n_e() / denom);
}

double pso_fd_approx(const NetworkParams& params, double q, double tau_e) {
    check_fraction(q);
    check_threshold(tau_e, "tau_e");
    if (params.lambda_e() == 0.0) {
        return 0.0;
    }
    const double denom = params.kappa() * q * params.lambda_l() * params.rho_delta() *
                         std::pow(tau_e, params.delta());
    if (denom == 0.0) {
        return 1.0;
    }
    const double rt = params.rho() * tau_e;
    const double factor = 1.0 - (rt / params.n_e()) / (1.0 + rt);
    return -std::expm1(-pi * params.lambda_e() * params.n_e() / denom * factor);
}

double pso_large_ne(const NetworkParams& params, double q, double tau_e) {
    return pso_hd_closed(params, q, tau_e);
}

}  // namespace fdsec
