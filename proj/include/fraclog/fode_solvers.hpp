#pragma once

#include "fraclog/model.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace fraclog {

enum class OperatorKind {
    ABC,      // Atangana-Baleanu (Mittag-Leffler kernel), Caputo sense
    CFC,      // Caputo-Fabrizio (exponential kernel), Caputo sense
    Caputo,   // power-law kernel
};

[[nodiscard]] std::string_view to_string(OperatorKind op) noexcept;
/// Accepts "abc", "cfc", "caputo" (case-insensitive). Throws DomainError.
[[nodiscard]] OperatorKind parse_operator(std::string_view name);

enum class Quadrature {
    ProductTrapezoidal,   // integrates the kernel exactly against the piecewise-linear interpolant of f
    Rectangle,            // left-point product rectangle, explicit in f_n
};

// Right-hand side variants. The default is the model itself.
enum class Nonlinearity {
    DelayedLogistic,   // r z(t) (1 - z(lambda t) / K)
    InstantLogistic,   // r z(t) (1 - z(t) / K), no delay lookup
    FrozenLinear,      // r z(t) (1 - z0 / K), the lambda = 0 model with the initial datum in the bracket
};

inline constexpr std::size_t kMaxSolverSteps = 10'000'000;

struct SolveConfig {
    OperatorKind op = OperatorKind::ABC;
    double t_end = 10.0;
    double h = 1e-2;
    int corrector_iters = 5;
    double corrector_tol = 1e-12;
    Quadrature quadrature = Quadrature::ProductTrapezoidal;
    Nonlinearity rhs = Nonlinearity::DelayedLogistic;
    double forcing = 0.0;   // constant added to the right-hand side
};

/// Throws DomainError on h <= 0, t_end < h, too many steps, or iters < 1.
void validate(const SolveConfig& cfg);

struct Trajectory {
    std::vector<double> grid;     // uniform, grid[0] = 0, grid.back() = t_end
    std::vector<double> values;
    OperatorKind op = OperatorKind::ABC;
    ModelParams params;

    [[nodiscard]] double step() const noexcept { return grid.size() > 1 ? grid[1] - grid[0] : 0.0; }
    /// Piecewise-linear interpolation on the grid, t in [0, t_end].
    [[nodiscard]] double at(double t) const;
};

/**
 * Solves the Volterra form of the model for the selected operator:
 *
 *   ABC:    z(t) = z0 + (1-mu)/B f(t) + mu/B I^mu f(t)
 *   CFC:    z(t) = z0 + (1-mu)/M (f(t) - f(0)) + mu/M I^1 f(t)
 *   Caputo: z(t) = z0 + I^mu f(t)
 *
 * where I^a f(t) = 1/Gamma(a) int_0^t (t-s)^(a-1) f(s) ds and B = M = p.b_norm.
 * The grid has ceil(t_end / h) uniform cells; h is shrunk so the last node
 * lands on t_end. The pantograph value z(lambda t_n) is linearly interpolated;
 * if it falls in the current cell it joins the implicit corrector solve.
 *
 * ABC stores at index 0 the solution of z = z0 + (1-mu)/B f(0, z, z), which
 * differs from z0 when mu < 1. CFC and Caputo store z0.
 *
 * Throws SolverFailure (with step index) when the corrector does not settle.
 */
[[nodiscard]] Trajectory solve(const ModelParams& p, const SolveConfig& cfg);

struct OperatorComparison {
    Trajectory abc;
    Trajectory cfc;
    Trajectory caputo;
};

/// Same grid, three operators. cfg_base.op is ignored.
[[nodiscard]] OperatorComparison compare_operators(const ModelParams& p, const SolveConfig& cfg_base);

} // namespace fraclog
