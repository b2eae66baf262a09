#pragma once

#include "fraclog/fode_solvers.hpp"
#include "fraclog/model.hpp"

#include <span>
#include <vector>

namespace fraclog {

// Empirical Hyers-Ulam check: deviation of the eps-forced solution from the
// unforced one, and the implied constant C(eps) = deviation / eps.
struct StabilityReport {
    std::vector<double> epsilons;
    std::vector<double> deviations;    // max over the grid of |u - z|
    std::vector<double> c_estimates;
    double horizon = 0.0;
};

/// Largest admissible perturbation: 0.1 K |r|, or 0.1 K when r = 0.
[[nodiscard]] double max_stability_epsilon(const ModelParams& p) noexcept;

/**
 * Solves the model once unforced and once per eps with the constant defect
 * f + eps, using cfg for both. Throws DomainError for an empty list or eps
 * outside (0, max_stability_epsilon(p)]; solver failures propagate.
 */
[[nodiscard]] StabilityReport hyers_ulam_probe(const ModelParams& p, const SolveConfig& cfg,
                                               std::span<const double> epsilons);

/// max |u(t) - z(t)| per grid node for a single eps; used to inspect the
/// deviation profile over time. Same eps bounds as hyers_ulam_probe.
[[nodiscard]] std::vector<double> deviation_profile(const ModelParams& p, const SolveConfig& cfg, double eps);

} // namespace fraclog
