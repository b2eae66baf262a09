#pragma once

#include "fraclog/model.hpp"

#include <vector>

namespace fraclog {

/// Classical logistic solution z0 K / (z0 + (K - z0) e^{-rt}). Ignores mu, lambda.
/// Throws DomainError for z0 <= 0.
[[nodiscard]] double classical_exact(const ModelParams& p, double t);

enum class Stability { Unstable, AsymptoticallyStable };

struct FixedPoint {
    double value = 0.0;
    Stability stability = Stability::Unstable;
};

/// Equilibria of the classical model, {(0, unstable), (K, stable)}. Only the
/// growth case is analysed: throws Unsupported for r <= 0.
[[nodiscard]] std::vector<FixedPoint> classical_fixed_points(const ModelParams& p);

// z(t) = A E_mu(q t^mu) for lambda = 0, where the delayed factor freezes at z0.
struct Lambda0Coefficients {
    double amplitude = 0.0;   // A = B z0 / (B + r (1 - z0/K)(mu - 1)); equals z(0), not z0, when mu < 1
    double rate = 0.0;        // q = r (1 - z0/K) mu / (B + r (1 - z0/K)(mu - 1))
};

/// Throws SingularParameters when the shared denominator vanishes (|.| < 1e-12).
[[nodiscard]] Lambda0Coefficients lambda0_coefficients(const ModelParams& p);

/// Exact solution of the lambda = 0 model. The lambda field of p is ignored.
[[nodiscard]] double abc_exact_lambda0(const ModelParams& p, double t);

} // namespace fraclog
