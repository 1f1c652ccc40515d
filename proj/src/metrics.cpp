#include "fdsec/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fdsec/errors.hpp"

namespace fdsec {

namespace {

constexpr double pi = std::numbers::pi;

void check_open_fraction(double q) {
    if (!(q > 0.0 && q <= 1.0)) {
        throw DomainError("q must lie in (0, 1]");
    }
}

void check_aux_domain(const OutageConstraints& c, double q) {
    if (!c.q_m) {
        throw DomainError("auxiliary functions need Delta > 1");
    }
    if (!(q >= *c.q_m && q <= 1.0)) {
        throw DomainError("q must lie in [q_m, 1]");
    }
}

struct WTerms {
    double w1m1; // w1 - 1
    double w2m1; // w2 - 1
};

WTerms w_terms(const NetworkParams& p, const NstAux& aux, double q) {
    const double half_alpha = 0.5 * p.alpha();
    const double x = p.rho_delta() * q;
    return {aux.beta1 * std::pow(1.0 + x, -half_alpha), aux.beta2 * std::pow(x, -half_alpha)};
}

double log_ratio(const WTerms& t) { return std::log1p(t.w1m1) - std::log1p(t.w2m1); }

double log_ratio_derivative(const NetworkParams& p, const WTerms& t, double q) {
    const double half_alpha = 0.5 * p.alpha();
    const double x = p.rho_delta() * q;
    const double dw1 = -half_alpha * p.rho_delta() * t.w1m1 / (1.0 + x);
    const double dw2 = -half_alpha * t.w2m1 / q;
    return dw1 / (1.0 + t.w1m1) - dw2 / (1.0 + t.w2m1);
}

}  // namespace

AslnAux asln_constants(const NetworkParams& p, double tau_t, double tau_e) {
    if (!(tau_t > 0.0) || !(tau_e > 0.0)) {
        throw DomainError("tau_t and tau_e must be positive");
    }
    if (!(p.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    const double d = p.delta();
    AslnAux aux{};
    aux.a = std::exp(-p.rho() * p.eta() * std::pow(p.r_o(), p.alpha()) * tau_t);
    aux.b = p.kappa() * p.r_o() * p.r_o() * std::pow(tau_t, d) * p.rho_delta() * p.lambda_l();
    aux.c = pi * p.lambda_e() * p.n_e() / (p.kappa() * p.lambda_l() * p.rho_delta() * std::pow(tau_e, d));
    return aux;
}

AslnEval asln_aux(const AslnAux& aux, double q) {
    check_open_fraction(q);
    const double f = (q * aux.a + 1.0 - q) * std::exp(-aux.b * q - aux.c / q);
    const double k = (aux.a + 1.0 / q - 1.0) * (1.0 + aux.c / q - aux.b * q) - 1.0 / q;
    return {f, k};
}

AslnEval asln_aux(const NetworkParams& params, double tau_t, double tau_e, double q) {
    return asln_aux(asln_constants(params, tau_t, tau_e), q);
}

double asln(const NetworkParams& p, double q, double tau_t, double tau_e) {
    const AslnAux aux = asln_constants(p, tau_t, tau_e);
    const double base = p.kappa() * p.r_o() * p.r_o() * std::pow(tau_t, p.delta()) * p.lambda_l();
    return p.lambda_l() * std::exp(-base) * asln_aux(aux, q).f;
}

double asln_general(double lambda_l, double q, double pco_hd, double pso_hd, double pco_fd,
                    double pso_fd) {
    if (!(lambda_l > 0.0)) {
        throw DomainError("lambda_l must be positive");
    }
    if (!(q >= 0.0 && q <= 1.0)) {
        throw DomainError("q must lie in [0, 1]");
    }
    for (double p : {pco_hd, pso_hd, pco_fd, pso_fd}) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw DomainError("outage probabilities must lie in [0, 1]");
        }
    }
    return lambda_l * (q * (1.0 - pco_fd) * (1.0 - pso_fd) + (1.0 - q) * (1.0 - pco_hd) * (1.0 - pso_hd));
}

NstAux nst_constants(const NetworkParams& p, const OutageConstraints& c) {
    const double half_alpha = 0.5 * p.alpha();
    const double kl = p.kappa() * p.lambda_l();
    const double inv_rho_delta = 1.0 / p.rho_delta();
    NstAux aux{};
    aux.beta1 = std::pow(c.sigma_o / (kl * p.r_o() * p.r_o()), half_alpha);
    aux.beta2 = std::pow(eavesdropper_load(p, c) / kl, half_alpha);
    aux.x_thresh = c.sigma_o / (p.r_o() * p.r_o() * (1.0 + inv_rho_delta));
    const double first = std::pow(kl, -half_alpha) * std::pow(p.rho(), -(1.0 + p.delta()));
    const double second = (1.0 + inv_rho_delta) * std::pow(aux.x_thresh, -half_alpha);
    aux.y_thresh = std::pow(first + second, -p.delta());
    return aux;
}

double eavesdropper_load(const NetworkParams& p, const OutageConstraints& c) {
    return pi * p.lambda_e() * p.n_e() / c.epsilon_o;
}

NstThresholds nst_thresholds(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_open_fraction(q);
    if (!(p.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    const WTerms t = w_terms(p, nst_constants(p, c), q);
    return {t.w1m1, t.w2m1};
}

double nst_log_ratio(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_open_fraction(q);
    if (!(p.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    return log_ratio(w_terms(p, nst_constants(p, c), q));
}

double nst_log_ratio_derivative(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_open_fraction(q);
    if (!(p.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    return log_ratio_derivative(p, w_terms(p, nst_constants(p, c), q), q);
}

double nst(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_open_fraction(q);
    if (!(p.rho() > 0.0)) {
        return 0.0;
    }
    const double w = log_ratio(w_terms(p, nst_constants(p, c), q));
    return p.lambda_l() * (1.0 - c.sigma) * std::max(w, 0.0);
}

NstEval nst_aux(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_aux_domain(c, q);
    const WTerms t = w_terms(p, nst_constants(p, c), q);
    const double x = p.rho_delta() * q;
    const double phi = 1.0 - ((1.0 + x) * (1.0 + t.w1m1) * t.w2m1) / (x * t.w1m1 * (1.0 + t.w2m1));
    return {log_ratio(t), phi};
}

double nst_root_equation(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_aux_domain(c, q);
    const NstAux aux = nst_constants(p, c);
    const double e = 1.0 + 0.5 * p.alpha();
    const double x = p.rho_delta() * q;
    const double num = 1.0 + x + std::pow(1.0 + x, e) / aux.beta1;
    const double den = x + std::pow(x, e) / aux.beta2;
    return 1.0 - num / den;
}

double nsee(const NetworkParams& p, const OutageConstraints& c, double q) {
    const double omega = nst(p, c, q);
    if (omega == 0.0) {
        return 0.0;
    }
    return omega / (p.lambda_l() * (p.p_t() + p.p_c() + q * p.p_j()));
}

NseeEval nsee_aux(const NetworkParams& p, const OutageConstraints& c, double q) {
    check_aux_domain(c, q);
    const NstAux aux = nst_constants(p, c);
    const WTerms t = w_terms(p, aux, q);
    const double w = log_ratio(t);
    const double dw = log_ratio_derivative(p, t, q);
    const double rc = p.rho_c();
    return {w / (1.0 + rc * q), dw * (1.0 + rc * q) - rc * w, nsee_w_cap(p, c)};
}

double nsee_w_cap(const NetworkParams& p, const OutageConstraints& c) {
    if (!(p.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    const WTerms t = w_terms(p, nst_constants(p, c), 1.0);
    const double inv_w1 = 1.0 / (1.0 + t.w1m1);
    const double inv_w2 = 1.0 / (1.0 + t.w2m1);
    return 1.0 - inv_w2 - (1.0 - inv_w1) / (1.0 + 1.0 / p.rho_delta());
}

}  // namespace fdsec
