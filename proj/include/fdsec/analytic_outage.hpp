#pragma once

#include "fdsec/core_model.hpp"
#include "fdsec/quadrature.hpp"

namespace fdsec {

/// Connection outage probability of a typical link with receiver in `mode`.
///
/// Product of the self-interference factor, the HD-link Laplace factor and the
/// FD-pair Laplace factor. The FD-pair exponent is evaluated as the
/// independent-point value kappa r_o^2 tau_t^delta (1 + rho^delta) minus the
/// correlation term returned by fd_pair_overlap(), which is a 2-D integral.
double pco_exact(const NetworkParams& params, DuplexMode mode, double q, double tau_t,
                 const QuadratureSpec& quad = {});

struct PcoBounds {
    double upper;
    double lower;
};

/// Closed-form upper and lower bounds on pco_exact().
PcoBounds pco_bounds(const NetworkParams& params, DuplexMode mode, double q, double tau_t);

/// Correlation term between the two interferers of an FD pair: the integral over the
/// plane of (1 - L_jammer)(1 - L_transmitter) where each L is the single-node
/// Laplace factor. Always >= 0 and scales as r_o^2.
double fd_pair_overlap(const NetworkParams& params, double tau_t, const QuadratureSpec& quad = {});

/// Union-type upper bound on the secrecy outage probability for a link in `mode`
/// against N_e-antenna MMSE eavesdroppers, as a double sum of 2-D integrals.
///
/// q = 0 (or rho = 0) with lambda_e > 0 returns exactly 1: without jammers the
/// eavesdropper SIR is unbounded.
double pso_upper(const NetworkParams& params, DuplexMode mode, double q, double tau_e,
                 const QuadratureSpec& quad = {});

/// Closed form of pso_upper() for an HD link:
/// 1 - exp(-pi lambda_e N_e / (kappa q lambda_l rho^delta tau_e^delta)).
double pso_hd_closed(const NetworkParams& params, double q, double tau_e);

/// Small-r_o approximation of the FD secrecy outage; never exceeds pso_hd_closed().
double pso_fd_approx(const NetworkParams& params, double q, double tau_e);

/// Large-N_e form shared by both link types. Same expression as pso_hd_closed().
double pso_large_ne(const NetworkParams& params, double q, double tau_e);

}  // namespace fdsec
