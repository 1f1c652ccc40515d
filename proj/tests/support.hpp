#pragma once

#include <cmath>
#include <random>

#include "fdsec/core_model.hpp"

namespace fdsec::testing {

inline bool rel_close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

inline NetworkParams network(double alpha, double lambda_l, double lambda_e, int n_e, double r_o,
                             double rho, double eta = 0.0, double p_c = 1.0) {
    NetworkInputs in;
    in.alpha = alpha;
    in.lambda_l = lambda_l;
    in.lambda_e = lambda_e;
    in.n_e = n_e;
    in.r_o = r_o;
    in.p_t = 1.0;
    in.p_j = rho;
    in.eta = eta;
    in.p_c = p_c;
    return build_network_params(in);
}

/// Log-uniform draw on [lo, hi].
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> u(std::log(lo), std::log(hi));
    return std::exp(u(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// Counts +/- sign changes of successive differences; returns {plus_to_minus, minus_to_plus}.
template <class F>
std::pair<int, int> sign_changes(F&& f, double lo, double hi, int points) {
    int down = 0;
    int up = 0;
    int last = 0;
    double prev = f(lo);
    for (int k = 1; k < points; ++k) {
        const double x = k == points - 1 ? hi : lo + (hi - lo) * k / (points - 1);
        const double v = f(x);
        const double d = v - prev;
        prev = v;
        const int s = d > 0 ? 1 : (d < 0 ? -1 : 0);
        if (s == 0) {
            continue;
        }
        if (last == 1 && s == -1) {
            ++down;
        } else if (last == -1 && s == 1) {
            ++up;
        }
        last = s;
    }
    return {down, up};
}

}  // namespace fdsec::testing
