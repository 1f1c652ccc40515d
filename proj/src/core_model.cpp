#include "fdsec/core_model.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fdsec/errors.hpp"

namespace fdsec {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw DomainError(message);
    }
}

bool finite(double x) { return std::isfinite(x); }

}  // namespace

double kappa_of(double alpha) {
    require(finite(alpha) && alpha > 2.0, "alpha must exceed 2");
    const double delta = 2.0 / alpha;
    return std::numbers::pi * std::tgamma(1.0 + delta) * std::tgamma(1.0 - delta);
}

NetworkParams::NetworkParams(const NetworkInputs& inputs)
    : in_(inputs),
      delta_(2.0 / inputs.alpha),
      kappa_(kappa_of(inputs.alpha)),
      rho_(inputs.p_j / inputs.p_t),
      rho_delta_(std::pow(rho_, delta_)),
      rho_c_(inputs.p_j / (inputs.p_t + inputs.p_c)) {}

NetworkParams build_network_params(const NetworkInputs& in) {
    require(finite(in.alpha) && in.alpha > 2.0, "alpha must exceed 2");
    require(finite(in.lambda_l) && in.lambda_l > 0.0, "lambda_l must be positive");
    require(finite(in.lambda_e) && in.lambda_e >= 0.0, "lambda_e must be non-negative");
    require(in.n_e >= 1, "n_e must be at least 1");
    require(finite(in.r_o) && in.r_o > 0.0, "r_o must be positive");
    require(finite(in.p_t) && in.p_t > 0.0, "p_t must be positive");
    require(finite(in.p_j) && in.p_j >= 0.0, "p_j must be non-negative");
    require(finite(in.eta) && in.eta >= 0.0 && in.eta <= 1.0, "eta must lie in [0, 1]");
    require(finite(in.p_c) && in.p_c >= 0.0, "p_c must be non-negative");
    return NetworkParams(in);
}

RateThresholds build_rate_thresholds(double r_t, double r_s) {
    require(finite(r_t) && r_t > 0.0, "r_t must be positive");
    require(finite(r_s) && r_s >= 0.0 && r_s <= r_t, "r_s must lie in [0, r_t]");
    const double r_e = r_t - r_s;
    return RateThresholds{r_t, r_s, r_e, std::exp2(r_t) - 1.0, std::exp2(r_e) - 1.0};
}

RateThresholds thresholds_from_sir(double tau_t, double tau_e) {
    require(finite(tau_t) && tau_t > 0.0, "tau_t must be positive");
    require(finite(tau_e) && tau_e > 0.0 && tau_e <= tau_t, "tau_e must lie in (0, tau_t]");
    const double r_t = std::log2(1.0 + tau_t);
    const double r_e = std::log2(1.0 + tau_e);
    return RateThresholds{r_t, r_t - r_e, r_e, tau_t, tau_e};
}

OutageConstraints build_outage_constraints(const NetworkParams& params, double sigma,
                                           double epsilon) {
    require(finite(sigma) && sigma > 0.0 && sigma < 1.0, "sigma must lie in (0, 1)");
    require(finite(epsilon) && epsilon > 0.0 && epsilon < 1.0, "epsilon must lie in (0, 1)");
    require(params.lambda_e() > 0.0, "outage constraints need lambda_e > 0");

    OutageConstraints c{};
    c.sigma = sigma;
    c.epsilon = epsilon;
    c.sigma_o = -std::log1p(-sigma);
    c.epsilon_o = -std::log1p(-epsilon);
    c.delta_cap = c.sigma_o * c.epsilon_o /
                  (std::numbers::pi * params.lambda_e() * params.n_e() * params.r_o() * params.r_o());
    if (c.delta_cap > 1.0 && params.rho() > 0.0) {
        c.q_m = 1.0 / (params.rho_delta() * (c.delta_cap - 1.0));
    }
    // rho = 0 makes rho^-delta infinite: no fraction of jammers helps.
    c.feasible = params.rho() > 0.0 && c.delta_cap > 1.0 + 1.0 / params.rho_delta();
    return c;
}

std::string_view to_string(DuplexMode mode) noexcept {
    return mode == DuplexMode::FD ? "fd" : "hd";
}

std::string_view to_string(CaseTag tag) noexcept {
    switch (tag) {
    case CaseTag::Infeasible: return "infeasible";
    case CaseTag::BoundaryOne: return "boundary_one";
    case CaseTag::InteriorRoot: return "interior_root";
    case CaseTag::ConstrainedRoot: return "constrained_root";
    }
    return "unknown";
}

}  // namespace fdsec
