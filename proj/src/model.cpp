#include "fraclog/model.hpp"

#include "fraclog/errors.hpp"

#include <cmath>

namespace fraclog {

void validate(const ModelParams& p)
{
    if (!std::isfinite(p.r)) {
        throw DomainError("r must be finite");
    }
    if (!(p.K > 0.0) || !std::isfinite(p.K)) {
        throw DomainError("k must be positive");
    }
    if (!(p.z0 > 0.0) || !std::isfinite(p.z0)) {
        throw DomainError("z0 must be positive");
    }
    if (!(p.mu > 0.0 && p.mu <= 1.0)) {
        throw DomainError("mu must lie in (0, 1]");
    }
    if (!(p.lambda >= 0.0 && p.lambda <= 1.0)) {
        throw DomainError("lambda must lie in [0, 1]");
    }
    if (!(p.b_norm > 0.0) || !std::isfinite(p.b_norm)) {
        throw DomainError("b-norm must be positive");
    }
}

} // namespace fraclog
