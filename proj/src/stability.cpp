#include "fraclog/stability.hpp"

#include "fraclog/errors.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <string>

namespace fraclog {
namespace {

std::vector<double> pointwise_gap(const Trajectory& a, const Trajectory& b)
{
    std::vector<double> gap(a.values.size());
    for (std::size_t i = 0; i < gap.size(); ++i) {
        gap[i] = std::fabs(a.values[i] - b.values[i]);
    }
    return gap;
}

void check_epsilon(const ModelParams& p, double eps)
{
    const double limit = max_stability_epsilon(p);
    if (!(eps > 0.0 && eps <= limit)) {
        throw DomainError("epsilons must lie in (0, " + std::to_string(limit) + "]");
    }
}

} // namespace

double max_stability_epsilon(const ModelParams& p) noexcept
{
    return p.r == 0.0 ? 0.1 * p.K : 0.1 * p.K * std::fabs(p.r);
}

std::vector<double> deviation_profile(const ModelParams& p, const SolveConfig& cfg, double eps)
{
    check_epsilon(p, eps);
    SolveConfig forced = cfg;
    forced.forcing = cfg.forcing + eps;
    return pointwise_gap(solve(p, forced), solve(p, cfg));
}

StabilityReport hyers_ulam_probe(const ModelParams& p, const SolveConfig& cfg, std::span<const double> epsilons)
{
    if (epsilons.empty()) {
        throw DomainError("epsilons must not be empty");
    }
    for (double eps : epsilons) {
        check_epsilon(p, eps);
    }

    const Trajectory reference = solve(p, cfg);

    // Each forced run is independent.
    std::vector<std::future<double>> runs;
    runs.reserve(epsilons.size());
    for (double eps : epsilons) {
        runs.push_back(std::async(std::launch::async, [&, eps] {
            SolveConfig forced = cfg;
            forced.forcing = cfg.forcing + eps;
            const auto gap = pointwise_gap(solve(p, forced), reference);
            return *std::max_element(gap.begin(), gap.end());
        }));
    }

    StabilityReport report;
    report.horizon = reference.grid.back();
    for (std::size_t i = 0; i < epsilons.size(); ++i) {
        const double deviation = runs[i].get();
        report.epsilons.push_back(epsilons[i]);
        report.deviations.push_back(deviation);
        report.c_estimates.push_back(deviation / epsilons[i]);
    }
    return report;
}

} // namespace fraclog
