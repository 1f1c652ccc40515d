#pragma once

#include <optional>
#include <string_view>

namespace fdsec {

/// Raw physical and geometric inputs of the network, before validation.
struct NetworkInputs {
    double alpha = 4.0;     ///< path-loss exponent, > 2
    double lambda_l = 1e-3; ///< legitimate receiver density
    double lambda_e = 0.0;  ///< eavesdropper density
    int n_e = 1;            ///< eavesdropper antennas
    double r_o = 1.0;       ///< legitimate link distance
    double p_t = 1.0;       ///< transmit power
    double p_j = 1.0;       ///< full-duplex jamming power
    double eta = 0.0;       ///< residual self-interference coefficient, linear
    double p_c = 0.0;       ///< circuit power
};

/// Validated network parameters plus the constants derived from them.
///
/// Instances are only produced by build_network_params() and never change
/// afterwards. To vary one input, copy inputs(), edit it, and rebuild.
class NetworkParams {
public:
    const NetworkInputs& inputs() const noexcept { return in_; }

    double alpha() const noexcept { return in_.alpha; }
    double lambda_l() const noexcept { return in_.lambda_l; }
    double lambda_e() const noexcept { return in_.lambda_e; }
    int n_e() const noexcept { return in_.n_e; }
    double r_o() const noexcept { return in_.r_o; }
    double p_t() const noexcept { return in_.p_t; }
    double p_j() const noexcept { return in_.p_j; }
    double eta() const noexcept { return in_.eta; }
    double p_c() const noexcept { return in_.p_c; }

    /// 2 / alpha
    double delta() const noexcept { return delta_; }
    /// pi * Gamma(1 + delta) * Gamma(1 - delta)
    double kappa() const noexcept { return kappa_; }
    /// P_j / P_t
    double rho() const noexcept { return rho_; }
    /// rho^delta, the effective jamming strength that recurs in every formula
    double rho_delta() const noexcept { return rho_delta_; }
    /// P_j / (P_t + P_c)
    double rho_c() const noexcept { return rho_c_; }

private:
    friend NetworkParams build_network_params(const NetworkInputs& inputs);
    explicit NetworkParams(const NetworkInputs& inputs);

    NetworkInputs in_;
    double delta_;
    double kappa_;
    double rho_;
    double rho_delta_;
    double rho_c_;
};

/// Validates the raw inputs and derives delta, kappa, rho and rho_c.
/// Throws DomainError naming the first violated bound.
NetworkParams build_network_params(const NetworkInputs& inputs);

/// kappa as a function of the path-loss exponent alone.
double kappa_of(double alpha);

/// Wiretap-code rates (bits per channel use) and the SIR thresholds they imply.
struct RateThresholds {
    double r_t;   ///< codeword rate
    double r_s;   ///< secrecy rate
    double r_e;   ///< redundancy r_t - r_s
    double tau_t; ///< 2^r_t - 1
    double tau_e; ///< 2^r_e - 1
};

/// From rates; requires r_t > 0 and 0 <= r_s <= r_t.
RateThresholds build_rate_thresholds(double r_t, double r_s);

/// From SIR thresholds directly; requires tau_t > 0 and 0 < tau_e <= tau_t.
RateThresholds thresholds_from_sir(double tau_t, double tau_e);

/// Connection/secrecy outage targets for the throughput and energy-efficiency designs.
struct OutageConstraints {
    double sigma;
    double epsilon;
    double sigma_o;           ///< ln(1 / (1 - sigma))
    double epsilon_o;         ///< ln(1 / (1 - epsilon))
    double delta_cap;         ///< sigma_o * epsilon_o / (pi * lambda_e * N_e * r_o^2)
    std::optional<double> q_m; ///< rho^-delta / (Delta - 1), present when Delta > 1
    bool feasible;            ///< Delta > 1 + rho^-delta, equivalently q_m < 1
};

/// Infeasible targets are reported through OutageConstraints::feasible, not thrown.
OutageConstraints build_outage_constraints(const NetworkParams& params, double sigma,
                                           double epsilon);

enum class DuplexMode { HD, FD };

constexpr bool is_full_duplex(DuplexMode mode) noexcept { return mode == DuplexMode::FD; }

std::string_view to_string(DuplexMode mode) noexcept;

enum class CaseTag { Infeasible, BoundaryOne, InteriorRoot, ConstrainedRoot };

std::string_view to_string(CaseTag tag) noexcept;

/// Outcome of one of the fraction optimizers.
struct OptimizationResult {
    std::optional<double> q_star;
    double objective = 0.0;
    CaseTag case_tag = CaseTag::Infeasible;
    double residual = 0.0; ///< |root equation| at q_star; 0 for boundary and infeasible cases
};

}  // namespace fdsec
