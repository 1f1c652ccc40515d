#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fdsec/core_model.hpp"

namespace fdsec {

struct SimulationConfig {
    double window_radius = 0.0;       ///< 0 picks default_window_radius()
    double eavesdropper_radius = 0.0; ///< 0 picks default_eavesdropper_radius()
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    DuplexMode mode = DuplexMode::FD;
    double q = 0.5;
    unsigned workers = 0; ///< 0 uses std::thread::hardware_concurrency()
};

/// max(100 r_o, 8 / sqrt(lambda_l)), widened so that the jammer field extends
/// 8 / sqrt(q lambda_l) past the eavesdropper disk when eavesdroppers are simulated
/// (tau_e given and lambda_e > 0).
double default_window_radius(const NetworkParams& params, double q, std::optional<double> tau_e);

/// Radius beyond which an eavesdropper's contribution to the secrecy outage is below
/// the tail cut of the analytic bound: sqrt((40 + 10 (N_e - 1)) / c) + r_o with
/// c = kappa q lambda_l rho^delta tau_e^delta. Capped at the window radius.
double default_eavesdropper_radius(const NetworkParams& params, double q, double tau_e,
                                   double window_radius);

/// Fills in the automatic radii and validates: window_radius >= 20 r_o, trials >= 1,
/// q in [0, 1]. Without tau_e no eavesdroppers are sampled (eavesdropper_radius = 0).
/// Throws DomainError.
SimulationConfig resolve(const NetworkParams& params, SimulationConfig config,
                         std::optional<double> tau_e);

struct Point {
    double x;
    double y;
};

/// An interfering pair; the receiver jams when full_duplex is set.
struct InterferingLink {
    Point receiver;
    Point transmitter;
    bool full_duplex;
    std::uint32_t index; ///< position in radial order, keys its fading and channel draws
};

/// One realization around the typical receiver at the origin, whose transmitter
/// sits at (r_o, 0).
struct NetworkRealization {
    std::vector<InterferingLink> links; ///< sorted by receiver distance from the origin
    std::vector<Point> eavesdroppers;   ///< sorted by distance from the origin
    Point typical_transmitter{};

    std::size_t hd_count() const noexcept;
    std::size_t fd_count() const noexcept;
    std::vector<Point> hd_receivers() const;
    std::vector<Point> fd_receivers() const;
};

/// Identifies the random streams of one trial.
struct TrialKey {
    std::uint64_t seed;
    std::uint64_t trial;
};

/// Receivers follow a PPP of density lambda_l in the window disk, thinned into FD
/// with probability q; each transmitter is displaced by r_o at a uniform angle.
/// Eavesdroppers follow a PPP of density lambda_e in the eavesdropper disk.
/// Points are generated radially, so a larger window extends a smaller one.
/// Expects a resolved config.
NetworkRealization sample_network(const NetworkParams& params, const SimulationConfig& config,
                                  TrialKey key);

/// SIR of the typical link with unit-mean exponential fading on every link and
/// constant residual self-interference eta P_j in FD mode. +inf without interference.
double simulate_sir_typical(const NetworkParams& params, const NetworkRealization& net,
                            DuplexMode mode, TrialKey key);

struct MmseResult {
    double sir;
    bool ill_conditioned; ///< reciprocal condition number of R below 1e-12
};

/// signal_power * g^H R^-1 g for Hermitian positive definite R.
/// Throws NumericalError when the result is not finite.
MmseResult mmse_sir(const Eigen::VectorXcd& g, double signal_power, const Eigen::MatrixXcd& r);

/// Channel vector of an eavesdropper to one node, CN(0, I) per antenna.
/// Slot 0 is the typical transmitter, slot 1 the typical receiver, slot 2 + k link k.
Eigen::VectorXcd eavesdropper_channel(TrialKey key, std::uint32_t eavesdropper, std::uint32_t slot,
                                      int n_e);

/// SIR of the MMSE eavesdropper `eavesdropper` of the realization. Fewer jammers than
/// antennas leaves the jamming covariance singular and the SIR is +inf.
MmseResult simulate_eavesdropper_sir(const NetworkParams& params, const NetworkRealization& net,
                                     DuplexMode mode, std::uint32_t eavesdropper, TrialKey key);

struct OutageEstimate {
    double p_hat = 0.0;
    double std_err = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t ill_conditioned = 0; ///< realizations counted as outage by the condition guard
};

/// Fraction of trials with typical-link SIR below tau_t.
OutageEstimate estimate_pco(const NetworkParams& params, const SimulationConfig& config, double tau_t);

/// Fraction of trials in which some eavesdropper reaches SIR >= tau_e.
OutageEstimate estimate_pso(const NetworkParams& params, const SimulationConfig& config, double tau_e);

}  // namespace fdsec
