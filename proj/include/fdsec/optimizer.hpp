#pragma once

#include <functional>

#include "fdsec/core_model.hpp"

namespace fdsec {

struct BisectOptions {
    double xtol = 1e-10;     ///< interval width at exit
    double ftol = 1e-10;     ///< also keep halving until |f| <= ftol or the interval cannot shrink
    int max_iter = 200;
};

struct BisectResult {
    double root;
    double residual; ///< |f(root)|
    int iterations;
};

/// Sign-change bisection on [lo, hi]. Deterministic.
///
/// Throws BracketError if f(lo) and f(hi) share a strict sign, ConvergenceError
/// if max_iter halvings do not meet the tolerances.
BisectResult bisect(const std::function<double(double)>& f, double lo, double hi,
                    const BisectOptions& opts = {});

struct GridResult {
    double q;
    double value;
};

/// Exhaustive argmax over lo, lo + step, ... and hi itself. Ties go to the smallest q.
GridResult grid_oracle(const std::function<double(double)>& objective, double lo, double hi,
                       double step);

/// Lower end of the bracket for K(q) = 0.
inline constexpr double kAslnBracketLow = 1e-12;
/// Offset above q_m for the NST and NSEE brackets.
inline constexpr double kQmOffset = 1e-12;

/// Fraction maximizing the area secure link number.
/// Throws DomainError when lambda_e = 0 (the supremum sits at q -> 0+) or rho = 0.
OptimizationResult optimize_asln(const NetworkParams& params, double tau_t, double tau_e,
                                 const BisectOptions& opts = {});

/// sqrt(C / B) for perfect self-interference cancellation, unclamped.
/// DomainError unless eta = 0.
double asln_q_closed_sic(const NetworkParams& params, double tau_t, double tau_e);

/// Fraction maximizing the network secrecy throughput.
OptimizationResult optimize_nst(const NetworkParams& params, const OutageConstraints& constraints,
                                const BisectOptions& opts = {});

/// rho^-delta / (Delta^(1/(1+delta)) - 1), the throughput-optimal fraction as lambda_l -> inf.
double nst_q_dense_limit(const NetworkParams& params, const OutageConstraints& constraints);

/// q* = 1 test for the energy-efficiency design written with W and w(1).
bool nsee_boundary_by_w(const NetworkParams& params, const OutageConstraints& constraints);
/// Same test written as Q(1) >= 0.
bool nsee_boundary_by_q1(const NetworkParams& params, const OutageConstraints& constraints);

/// Fraction maximizing the network secrecy energy efficiency.
OptimizationResult optimize_nsee(const NetworkParams& params, const OutageConstraints& constraints,
                                 const BisectOptions& opts = {});

/// As optimize_nsee() with the extra requirement that the throughput exceed omega_min.
/// Infeasible (objective 0) when the best achievable throughput does not.
OptimizationResult optimize_nsee_constrained(const NetworkParams& params,
                                             const OutageConstraints& constraints, double omega_min,
                                             const BisectOptions& opts = {});

}  // namespace fdsec
