#include "fraclog/closed_forms.hpp"

#include "fraclog/errors.hpp"
#include "fraclog/special_functions.hpp"

#include <cmath>

namespace fraclog {

double classical_exact(const ModelParams& p, double t)
{
    if (!(p.z0 > 0.0)) {
        throw DomainError("classical_exact: z0 must be positive");
    }
    if (!(p.K > 0.0)) {
        throw DomainError("classical_exact: k must be positive");
    }
    if (t == 0.0) {
        return p.z0;
    }
    return p.z0 * p.K / (p.z0 + (p.K - p.z0) * std::exp(-p.r * t));
}

std::vector<FixedPoint> classical_fixed_points(const ModelParams& p)
{
    if (!(p.r > 0.0)) {
        throw Unsupported("classical_fixed_points: only the growth case r > 0 is analysed");
    }
    if (!(p.K > 0.0)) {
        throw DomainError("classical_fixed_points: k must be positive");
    }
    return {FixedPoint{0.0, Stability::Unstable}, FixedPoint{p.K, Stability::AsymptoticallyStable}};
}

Lambda0Coefficients lambda0_coefficients(const ModelParams& p)
{
    ModelParams checked = p;
    checked.lambda = 0.0;
    validate(checked);
    const double growth = p.r * logistic_headroom(p);
    const double denom = p.b_norm + growth * (p.mu - 1.0);
    if (std::fabs(denom) < 1e-12) {
        throw SingularParameters("abc_exact_lambda0: B + r (1 - z0/K)(mu - 1) vanishes");
    }
    return Lambda0Coefficients{p.b_norm * p.z0 / denom, growth * p.mu / denom};
}

double abc_exact_lambda0(const ModelParams& p, double t)
{
    if (!(t >= 0.0)) {
        throw DomainError("abc_exact_lambda0: t must be nonnegative");
    }
    const auto c = lambda0_coefficients(p);
    return c.amplitude * mittag_leffler(MLParams{p.mu, c.rate * std::pow(t, p.mu)});
}

} // namespace fraclog
