#pragma once

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <string>
#include <vector>
#include <string_view>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "fdsec/errors.hpp"

namespace fdsec {

/// Truncation of the gamma-weighted semi-infinite integrals: the upper limit for
/// an integrand weighted by u^k e^-u is base + per_order * k.
struct TailCut {
    double base = 40.0;
    double per_order = 10.0;

    double at(int order) const noexcept { return base + per_order * order; }
};

struct QuadratureSpec {
    double rel_tol = 1e-8;
    int max_panels = 4096;
    TailCut tail_cut{};
};

/// Throws DomainError unless rel_tol > 0, max_panels >= 16 and the tail cut is positive.
void validate(const QuadratureSpec& spec);

namespace detail {

inline unsigned depth_for(int max_panels) {
    unsigned depth = 0;
    while ((2 << depth) <= max_panels) {
        ++depth;
    }
    return depth;
}

}  // namespace detail

/// Adaptive 15-point Gauss-Kronrod integral of f over [a, b].
///
/// The panel budget caps the bisection depth. An error estimate clearly above
/// rel_tol * integral(|f|) after the budget is spent raises QuadratureError.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol, int max_panels, std::string_view what) {
    using Rule = boost::math::quadrature::gauss_kronrod<double, 15>;
    double error = 0.0;
    double l1 = 0.0;
    const double value = Rule::integrate(f, a, b, detail::depth_for(max_panels), rel_tol, &error, &l1);
    // Boost stops once the summed estimate reaches rel_tol * L1 up to rounding in its
    // bookkeeping, so converged results can land a hair above; a factor 2 absorbs that.
    if (!std::isfinite(value) || error > 2.0 * rel_tol * l1 + 1e-300) {
        throw QuadratureError(std::string(what) + ": error estimate " + std::to_string(error) +
                              " exceeds tolerance after " + std::to_string(max_panels) + " panels");
    }
    return value;
}

/// A feature of width `scale` at `center`: integrate_graded() places breakpoints at
/// center +/- scale * 4^k so narrow peaks and knees get panels of their own size.
struct Feature {
    double center;
    double scale;
};

/// integrate() over [a, b] split at geometric breakpoints around each feature.
/// Features with a scale not small against b - a add nothing.
template <class F>
double integrate_graded(F&& f, double a, double b, std::initializer_list<Feature> features,
                        double rel_tol, int max_panels, std::string_view what) {
    std::vector<double> cuts{a, b};
    for (const Feature& ft : features) {
        if (!(ft.scale > 0.0) || ft.scale * 16.0 > b - a) {
            continue;
        }
        if (ft.center > a && ft.center < b) {
            cuts.push_back(ft.center);
        }
        for (double h = ft.scale; h < b - a; h *= 4.0) {
            for (double x : {ft.center - h, ft.center + h}) {
                if (x > a && x < b) {
                    cuts.push_back(x);
                }
            }
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    double total = 0.0;
    for (std::size_t i = 1; i < cuts.size(); ++i) {
        total += integrate(f, cuts[i - 1], cuts[i], rel_tol, max_panels, what);
    }
    return total;
}

}  // namespace fdsec
