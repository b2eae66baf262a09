#pragma once

namespace fraclog {

// Logistic model with fractional order and proportional delay:
//   D^mu z(t) = r z(t) (1 - z(lambda t) / K),  z(0) = z0.
struct ModelParams {
    double r = 0.1;        // growth rate, 1/time
    double K = 100.0;      // carrying capacity
    double z0 = 10.0;      // initial value
    double mu = 0.9;       // fractional order, (0, 1]
    double lambda = 0.5;   // delay factor, [0, 1]
    double b_norm = 1.0;   // operator normalization B(mu) (M(mu) for the exponential kernel)
};

/// Throws DomainError naming the first offending field.
void validate(const ModelParams& p);

/// 1 - z0 / K
[[nodiscard]] inline double logistic_headroom(const ModelParams& p) noexcept { return 1.0 - p.z0 / p.K; }

} // namespace fraclog
