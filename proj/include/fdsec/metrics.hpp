#pragma once

#include "fdsec/core_model.hpp"

namespace fdsec {

// ---- ASLN ---------------------------------------------------------------

/// Constants of F(q) = (qA + 1 - q) exp(-Bq - C/q).
struct AslnAux {
    double a; ///< exp(-rho eta r_o^alpha tau_t)
    double b; ///< kappa r_o^2 tau_t^delta rho^delta lambda_l
    double c; ///< pi lambda_e N_e / (kappa lambda_l rho^delta tau_e^delta)
};

/// Requires rho > 0 and tau_t, tau_e > 0.
AslnAux asln_constants(const NetworkParams& params, double tau_t, double tau_e);

struct AslnEval {
    double f; ///< F(q)
    double k; ///< K(q), same sign as F'(q)
};

/// F(q) and K(q) = (A + 1/q - 1)(1 + C/q - Bq) - 1/q on q in (0, 1].
AslnEval asln_aux(const NetworkParams& params, double tau_t, double tau_e, double q);
AslnEval asln_aux(const AslnAux& aux, double q);

/// Area secure link number with the robust connection bound and the large-N_e
/// secrecy outage: lambda_l exp(-kappa r_o^2 tau_t^delta lambda_l) F(q).
double asln(const NetworkParams& params, double q, double tau_t, double tau_e);

/// Area secure link number from arbitrary outage values of each receiver type.
double asln_general(double lambda_l, double q, double pco_hd, double pso_hd, double pco_fd,
                    double pso_fd);

// ---- NST ----------------------------------------------------------------

struct NstAux {
    double beta1;    ///< (sigma_o / (kappa lambda_l r_o^2))^(alpha/2)
    double beta2;    ///< (pi lambda_e N_e / (kappa lambda_l epsilon_o))^(alpha/2)
    double x_thresh; ///< feasibility threshold on pi lambda_e N_e / epsilon_o
    double y_thresh; ///< below this the optimum is interior
};

NstAux nst_constants(const NetworkParams& params, const OutageConstraints& constraints);

/// pi lambda_e N_e / epsilon_o, the quantity compared against X and Y.
double eavesdropper_load(const NetworkParams& params, const OutageConstraints& constraints);

struct NstThresholds {
    double tau_t_o;
    double tau_e_o;
};

/// SIR thresholds that meet the connection and secrecy targets exactly at fraction q.
/// Requires q in (0, 1] and rho > 0.
NstThresholds nst_thresholds(const NetworkParams& params, const OutageConstraints& constraints,
                             double q);

/// ln(w1(q) / w2(q)) = ln((1 + tau_t_o) / (1 + tau_e_o)); negative below q_m.
double nst_log_ratio(const NetworkParams& params, const OutageConstraints& constraints, double q);

/// Analytic derivative of nst_log_ratio() in q.
double nst_log_ratio_derivative(const NetworkParams& params, const OutageConstraints& constraints,
                                double q);

/// Network secrecy throughput lambda_l (1 - sigma) [w(q)]^+. Zero for q <= q_m.
double nst(const NetworkParams& params, const OutageConstraints& constraints, double q);

struct NstEval {
    double w;
    double phi; ///< sign(w'(q)) = -sign(phi(q))
};

/// w(q) and phi(q) on [q_m, 1]. DomainError elsewhere or when no q_m exists.
NstEval nst_aux(const NetworkParams& params, const OutageConstraints& constraints, double q);

/// phi(q) written as the optimality equation
/// 1 - (1 + x + (1 + x)^(1 + alpha/2) / beta1) / (x + x^(1 + alpha/2) / beta2), x = rho^delta q.
double nst_root_equation(const NetworkParams& params, const OutageConstraints& constraints,
                         double q);

// ---- NSEE ---------------------------------------------------------------

/// Energy efficiency (1 - sigma) / (P_t + P_c) * J(q); zero where the throughput is zero.
double nsee(const NetworkParams& params, const OutageConstraints& constraints, double q);

struct NseeEval {
    double j; ///< w(q) / (1 + rho_c q)
    double q_fn; ///< Q(q) = w'(q)(1 + rho_c q) - rho_c w(q), same sign as J'(q)
    double w_cap; ///< W = 1 - 1/w2(1) - (1 - 1/w1(1)) / (1 + rho^-delta)
};

/// J, Q and W on [q_m, 1]. DomainError elsewhere or when no q_m exists.
NseeEval nsee_aux(const NetworkParams& params, const OutageConstraints& constraints, double q);

/// W alone.
double nsee_w_cap(const NetworkParams& params, const OutageConstraints& constraints);

}  // namespace fdsec
