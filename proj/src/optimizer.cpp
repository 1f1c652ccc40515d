#include "fdsec/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fdsec/errors.hpp"
#include "fdsec/metrics.hpp"

namespace fdsec {

namespace {

bool opposite(double a, double b) { return (a < 0.0 && b > 0.0) || (a > 0.0 && b < 0.0); }

OptimizationResult infeasible() { return OptimizationResult{std::nullopt, 0.0, CaseTag::Infeasible, 0.0}; }

double q_low(const OutageConstraints& c) { return *c.q_m + kQmOffset; }

}  // namespace

BisectResult bisect(const std::function<double(double)>& f, double lo, double hi,
                    const BisectOptions& opts) {
    if (!(opts.xtol > 0.0) || !(opts.ftol > 0.0) || opts.max_iter < 1) {
        throw DomainError("bisection tolerances and iteration cap must be positive");
    }
    if (!(lo < hi)) {
        throw DomainError("bisection needs lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (std::isnan(flo) || std::isnan(fhi)) {
        throw NumericalError("bisection endpoint evaluates to NaN");
    }
    if (flo == 0.0) {
        return {lo, 0.0, 0};
    }
    if (fhi == 0.0) {
        return {hi, 0.0, 0};
    }
    if (!opposite(flo, fhi)) {
        throw BracketError("no sign change on [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }

    int iter = 0;
    bool done = false;
    while (iter < opts.max_iter) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            done = true;
            break;
        }
        ++iter;
        const double fm = f(mid);
        if (std::isnan(fm)) {
            throw NumericalError("bisection met NaN at " + std::to_string(mid));
        }
        if (fm == 0.0) {
            return {mid, 0.0, iter};
        }
        if (opposite(flo, fm)) {
            hi = mid;
            fhi = fm;
        } else {
            lo = mid;
            flo = fm;
        }
        if (hi - lo <= opts.xtol && std::min(std::abs(flo), std::abs(fhi)) <= opts.ftol) {
            done = true;
            break;
        }
    }
    if (!done) {
        throw ConvergenceError("bisection did not converge in " + std::to_string(opts.max_iter) +
                               " iterations");
    }
    return std::abs(flo) <= std::abs(fhi) ? BisectResult{lo, std::abs(flo), iter}
                                          : BisectResult{hi, std::abs(fhi), iter};
}

GridResult grid_oracle(const std::function<double(double)>& objective, double lo, double hi,
                       double step) {
    if (!(step > 0.0) || !(lo < hi)) {
        throw DomainError("grid needs step > 0 and lo < hi");
    }
    const auto n = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
    GridResult best{lo, objective(lo)};
    for (long long k = 1; k <= n; ++k) {
        const double q = std::min(hi, lo + static_cast<double>(k) * step);
        const double v = objective(q);
        if (v > best.value) {
            best = {q, v};
        }
    }
    // The end point is always a candidate, even when step does not divide the range.
    if (lo + static_cast<double>(n) * step < hi) {
        const double v = objective(hi);
        if (v > best.value) {
            best = {hi, v};
        }
    }
    return best;
}

OptimizationResult optimize_asln(const NetworkParams& params, double tau_t, double tau_e,
                                 const BisectOptions& opts) {
    if (params.lambda_e() == 0.0) {
        throw DomainError("ASLN has no maximizer in (0, 1] when lambda_e = 0");
    }
    const AslnAux aux = asln_constants(params, tau_t, tau_e);
    const double k1 = aux.a * (1.0 + aux.c - aux.b) - 1.0;
    if (k1 >= 0.0) {
        return {1.0, asln(params, 1.0, tau_t, tau_e), CaseTag::BoundaryOne, 0.0};
    }
    const auto r = bisect([&](double q) { return asln_aux(aux, q).k; }, kAslnBracketLow, 1.0, opts);
    return {r.root, asln(params, r.root, tau_t, tau_e), CaseTag::InteriorRoot, r.residual};
}

double asln_q_closed_sic(const NetworkParams& params, double tau_t, double tau_e) {
    if (params.eta() != 0.0) {
        throw DomainError("closed-form ASLN fraction needs eta = 0");
    }
    const AslnAux aux = asln_constants(params, tau_t, tau_e);
    return std::sqrt(aux.c / aux.b);
}

OptimizationResult optimize_nst(const NetworkParams& params, const OutageConstraints& constraints,
                                const BisectOptions& opts) {
    if (!(params.rho() > 0.0)) {
        return infeasible();
    }
    const NstAux aux = nst_constants(params, constraints);
    const double z = eavesdropper_load(params, constraints);
    if (!(z < aux.x_thresh) || !constraints.q_m || *constraints.q_m >= 1.0) {
        return infeasible();
    }
    if (z >= aux.y_thresh) {
        return {1.0, nst(params, constraints, 1.0), CaseTag::BoundaryOne, 0.0};
    }
    const auto r = bisect([&](double q) { return nst_root_equation(params, constraints, q); },
                          q_low(constraints), 1.0, opts);
    return {r.root, nst(params, constraints, r.root), CaseTag::InteriorRoot, r.residual};
}

double nst_q_dense_limit(const NetworkParams& params, const OutageConstraints& constraints) {
    if (!(constraints.delta_cap > 1.0)) {
        throw DomainError("dense-network limit needs Delta > 1");
    }
    if (!(params.rho() > 0.0)) {
        throw DomainError("rho must be positive");
    }
    const double root = std::pow(constraints.delta_cap, 1.0 / (1.0 + params.delta()));
    return 1.0 / (params.rho_delta() * (root - 1.0));
}

bool nsee_boundary_by_w(const NetworkParams& params, const OutageConstraints& constraints) {
    const double w1 = nst_log_ratio(params, constraints, 1.0);
    const double rc = params.rho_c();
    return nsee_w_cap(params, constraints) / w1 >= params.delta() * rc / (1.0 + rc);
}

bool nsee_boundary_by_q1(const NetworkParams& params, const OutageConstraints& constraints) {
    return nsee_aux(params, constraints, 1.0).q_fn >= 0.0;
}

OptimizationResult optimize_nsee(const NetworkParams& params, const OutageConstraints& constraints,
                                 const BisectOptions& opts) {
    if (!(params.rho() > 0.0)) {
        return infeasible();
    }
    const NstAux aux = nst_constants(params, constraints);
    const double z = eavesdropper_load(params, constraints);
    if (!(z < aux.x_thresh) || !constraints.q_m || *constraints.q_m >= 1.0) {
        return infeasible();
    }
    if (nsee_boundary_by_w(params, constraints)) {
        return {1.0, nsee(params, constraints, 1.0), CaseTag::BoundaryOne, 0.0};
    }
    const auto r = bisect([&](double q) { return nsee_aux(params, constraints, q).q_fn; },
                          q_low(constraints), 1.0, opts);
    return {r.root, nsee(params, constraints, r.root), CaseTag::InteriorRoot, r.residual};
}

OptimizationResult optimize_nsee_constrained(const NetworkParams& params,
                                             const OutageConstraints& constraints, double omega_min,
                                             const BisectOptions& opts) {
    if (!(omega_min >= 0.0) || !std::isfinite(omega_min)) {
        throw DomainError("omega_min must be non-negative");
    }
    const OptimizationResult ee = optimize_nsee(params, constraints, opts);
    if (ee.case_tag == CaseTag::Infeasible) {
        return ee;
    }
    const OptimizationResult st = optimize_nst(params, constraints, opts);
    if (st.case_tag == CaseTag::Infeasible || st.objective <= omega_min) {
        return infeasible();
    }
    const double q_st = *st.q_star;
    auto gap = [&](double q) { return nst(params, constraints, q) - omega_min; };

    double q1 = *constraints.q_m;
    double r1 = 0.0;
    if (omega_min > 0.0) {
        const auto r = bisect(gap, *constraints.q_m, q_st, opts);
        q1 = r.root;
        r1 = r.residual;
    }
    double q2 = std::numeric_limits<double>::infinity();
    double r2 = 0.0;
    if (q_st < 1.0 && gap(1.0) < 0.0) {
        const auto r = bisect(gap, q_st, 1.0, opts);
        q2 = r.root;
        r2 = r.residual;
    }

    const double q_ee = *ee.q_star;
    if (q_ee < q1) {
        return {q1, nsee(params, constraints, q1), CaseTag::ConstrainedRoot, r1};
    }
    if (q_ee >= q2) {
        return {q2, nsee(params, constraints, q2), CaseTag::ConstrainedRoot, r2};
    }
    return ee;
}

}  // namespace fdsec
