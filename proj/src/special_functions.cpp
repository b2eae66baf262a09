#include "fraclog/special_functions.hpp"

#include "fraclog/errors.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace fraclog {
namespace {

constexpr int kMaxSeriesTerms = 200000;

// Neumaier's variant of Kahan summation.
class CompensatedSum {
public:
    void add(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::fabs(sum_) >= std::fabs(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
    }

    [[nodiscard]] double value() const noexcept { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

void validate(const MLParams& p)
{
    if (!(p.mu > 0.0 && p.mu <= 1.0)) {
        throw DomainError("mittag_leffler: order mu must lie in (0, 1]");
    }
    if (!std::isfinite(p.arg)) {
        throw DomainError("mittag_leffler: argument must be finite");
    }
}

double taylor_series(double mu, double z, double cutoff)
{
    if (z == 0.0) {
        return 1.0;
    }
    // Overflow guard: E_mu(z) ~ exp(z^(1/mu)) / mu for large positive z.
    if (z > 0.0 && std::pow(z, 1.0 / mu) > 709.0) {
        return std::numeric_limits<double>::infinity();
    }

    const double log_abs = std::log(std::fabs(z));
    const bool negative = z < 0.0;
    CompensatedSum sum;
    sum.add(1.0);
    for (int n = 1; n < kMaxSeriesTerms; ++n) {
        const double magnitude = std::exp(n * log_abs - std::lgamma(n * mu + 1.0));
        const double term = (negative && (n % 2 == 1)) ? -magnitude : magnitude;
        sum.add(term);
        // Term ratios |z| Gamma(n mu + 1) / Gamma((n+1) mu + 1) decrease in n,
        // so once past the peak a small term stays small.
        const double next_log = (n + 1) * log_abs - std::lgamma((n + 1) * mu + 1.0);
        if (next_log < n * log_abs - std::lgamma(n * mu + 1.0)
            && std::exp(next_log) < cutoff * std::fabs(sum.value())) {
            break;
        }
    }
    return sum.value();
}

// E_mu(-x), 0 < mu < 1, x > 0, via the complete-monotonicity integral
//   sin(mu pi)/(mu pi) int_0^inf exp(-(x s)^(1/mu)) / ((s - s0)^2 + w^2) ds,
// s0 = -cos(mu pi), w = sin(mu pi). The substitution s = s0 + w tan(theta)
// absorbs the Lorentzian factor, leaving
//   1/(mu pi) int_{theta0}^{pi/2} exp(-(x s(theta))^(1/mu)) dtheta.
double negative_integral(double mu, double x)
{
    using boost::math::quadrature::gauss_kronrod;
    const double center = -std::cos(mu * std::numbers::pi);
    const double width = std::sin(mu * std::numbers::pi);
    const double inv_mu = 1.0 / mu;
    const auto theta_of = [&](double s) { return std::atan((s - center) / width); };
    auto integrand = [&](double theta) {
        const double s = std::max(0.0, center + width * std::tan(theta));
        return std::exp(-std::pow(x * s, inv_mu));
    };
    constexpr unsigned kMaxDepth = 12;
    constexpr double kTol = 1e-10;

    // Breakpoints where exp(-(x s)^(1/mu)) turns over and where it drops below e^-50.
    const double theta0 = theta_of(0.0);
    const double theta1 = theta_of(1.0 / x);
    const double theta2 = theta_of(std::pow(50.0, mu) / x);
    const double half_pi = std::numbers::pi / 2.0;
    double total = gauss_kronrod<double, 31>::integrate(integrand, theta0, theta1, kMaxDepth, kTol);
    total += gauss_kronrod<double, 31>::integrate(integrand, theta1, theta2, kMaxDepth, kTol);
    total += gauss_kronrod<double, 31>::integrate(integrand, theta2, half_pi, kMaxDepth, kTol);
    return total / (mu * std::numbers::pi);
}

} // namespace

double gamma_fn(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("gamma_fn: argument must be positive and finite");
    }
    return std::tgamma(x);
}

double log_gamma(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError("log_gamma: argument must be positive and finite");
    }
    return std::lgamma(x);
}

double mittag_leffler(const MLParams& p)
{
    return mittag_leffler(p, kMittagLefflerSeriesCutoff);
}

double mittag_leffler(const MLParams& p, double series_cutoff)
{
    validate(p);
    const double mu = p.mu;
    const double z = p.arg;

    if (z >= -1.0) {
        return taylor_series(mu, z, series_cutoff);
    }
    if (mu == 1.0) {
        // E_1(-x) = 1 / E_1(x); the integral kernel degenerates at mu = 1.
        return 1.0 / taylor_series(1.0, -z, series_cutoff);
    }
    if (z >= kMittagLefflerAsymptoticThreshold) {
        return negative_integral(mu, -z);
    }
    return 1.0 / (-z * std::tgamma(1.0 - mu));
}

} // namespace fraclog
