#pragma once

// Thin C++ ownership layer over the C interface.

#include <memory>
#include <stdexcept>
#include <string>

#include "fdsec/fdsec.h"

namespace fdsec_cli {

class ApiError : public std::runtime_error {
public:
    ApiError(fdsec_status status, const std::string& message)
        : std::runtime_error(message), status_(status) {}
    fdsec_status status() const noexcept { return status_; }

private:
    fdsec_status status_;
};

inline void check(fdsec_status status) {
    if (status != FDSEC_OK) {
        throw ApiError(status, std::string(fdsec_status_string(status)) + ": " + fdsec_last_error());
    }
}

struct ParamsDeleter {
    void operator()(fdsec_params* p) const noexcept { fdsec_params_destroy(p); }
};
struct ConstraintsDeleter {
    void operator()(fdsec_constraints* c) const noexcept { fdsec_constraints_destroy(c); }
};

using Params = std::unique_ptr<fdsec_params, ParamsDeleter>;
using Constraints = std::unique_ptr<fdsec_constraints, ConstraintsDeleter>;

inline Params make_params(const fdsec_network_desc& desc) {
    fdsec_params* raw = nullptr;
    check(fdsec_params_create(&desc, &raw));
    return Params(raw);
}

inline Constraints make_constraints(const fdsec_params* params, double sigma, double epsilon) {
    fdsec_constraints* raw = nullptr;
    check(fdsec_constraints_create(params, sigma, epsilon, &raw));
    return Constraints(raw);
}

/// Calls an fdsec_* function returning one double through its last argument.
template <class Fn, class... Args>
double value_of(Fn fn, Args... args) {
    double out = 0.0;
    check(fn(args..., &out));
    return out;
}

}  // namespace fdsec_cli
