#include "fdsec/quadrature.hpp"

namespace fdsec {

void validate(const QuadratureSpec& spec) {
    if (!(spec.rel_tol > 0.0) || !std::isfinite(spec.rel_tol)) {
        throw DomainError("quadrature rel_tol must be positive");
    }
    if (spec.max_panels < 16) {
        throw DomainError("quadrature max_panels must be at least 16");
    }
    if (!(spec.tail_cut.base > 0.0) || spec.tail_cut.per_order < 0.0) {
        throw DomainError("quadrature tail cut must be positive");
    }
}

}  // namespace fdsec
