#include "fraclog/fode_solvers.hpp"

#include "fraclog/errors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace fraclog {
namespace {

// The t = 0 relation of the ABC form is a scalar equation started from z0,
// far from its root, so it gets a larger iteration budget.
constexpr int kStartupIters = 200;
constexpr double kMaxAcceptedResidual = 1e-6;

// Quadrature weights for I^alpha f(t_n) on a uniform grid.
class KernelWeights {
public:
    KernelWeights(double alpha, double h, std::size_t steps, Quadrature rule)
        : alpha_(alpha), rule_(rule)
    {
        if (rule_ == Quadrature::ProductTrapezoidal) {
            scale_ = std::pow(h, alpha_) / std::tgamma(alpha_ + 2.0);
            interior_.resize(steps + 1, 0.0);
            for (std::size_t k = 1; k <= steps; ++k) {
                const double kd = static_cast<double>(k);
                interior_[k] = std::pow(kd + 1.0, alpha_ + 1.0) - 2.0 * std::pow(kd, alpha_ + 1.0)
                               + std::pow(kd - 1.0, alpha_ + 1.0);
            }
        } else {
            scale_ = std::pow(h, alpha_) / std::tgamma(alpha_ + 1.0);
            interior_.resize(steps + 1, 0.0);
            for (std::size_t k = 0; k <= steps; ++k) {
                const double kd = static_cast<double>(k);
                interior_[k] = std::pow(kd + 1.0, alpha_) - std::pow(kd, alpha_);
            }
        }
    }

    // Sum over j < n of w_{n,j} f_j.
    [[nodiscard]] double history(std::size_t n, const std::vector<double>& f) const
    {
        double sum = 0.0;
        if (rule_ == Quadrature::ProductTrapezoidal) {
            const double nd = static_cast<double>(n);
            const double first = std::pow(nd - 1.0, alpha_ + 1.0) - (nd - 1.0 - alpha_) * std::pow(nd, alpha_);
            sum = first * f[0];
            for (std::size_t j = 1; j < n; ++j) {
                sum += interior_[n - j] * f[j];
            }
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                sum += interior_[n - 1 - j] * f[j];
            }
        }
        return scale_ * sum;
    }

    // Weight on f_n.
    [[nodiscard]] double diagonal() const noexcept
    {
        return rule_ == Quadrature::ProductTrapezoidal ? scale_ : 0.0;
    }

private:
    double alpha_;
    Quadrature rule_;
    double scale_ = 0.0;
    std::vector<double> interior_;
};

// z_n = z0 + pointwise * f_n - offset + memory * I f(t_n)
struct OperatorForm {
    double pointwise = 0.0;
    double memory = 1.0;
    double kernel_order = 1.0;
    bool subtract_initial_rate = false;
};

OperatorForm operator_form(OperatorKind op, const ModelParams& p)
{
    switch (op) {
    case OperatorKind::ABC:
        return {(1.0 - p.mu) / p.b_norm, p.mu / p.b_norm, p.mu, false};
    case OperatorKind::CFC:
        return {(1.0 - p.mu) / p.b_norm, p.mu / p.b_norm, 1.0, true};
    case OperatorKind::Caputo:
        return {0.0, 1.0, p.mu, false};
    }
    return {};
}

class RightHandSide {
public:
    RightHandSide(const ModelParams& p, const SolveConfig& cfg) : p_(p), kind_(cfg.rhs), forcing_(cfg.forcing) {}

    [[nodiscard]] double operator()(double current, double delayed) const noexcept
    {
        switch (kind_) {
        case Nonlinearity::DelayedLogistic:
            return p_.r * current * (1.0 - delayed / p_.K) + forcing_;
        case Nonlinearity::InstantLogistic:
            return p_.r * current * (1.0 - current / p_.K) + forcing_;
        case Nonlinearity::FrozenLinear:
            return p_.r * current * (1.0 - p_.z0 / p_.K) + forcing_;
        }
        return 0.0;
    }

private:
    ModelParams p_;
    Nonlinearity kind_;
    double forcing_;
};

// z(lambda t_n) from the grid values, given a candidate z_n.
double delayed_value(const std::vector<double>& z, std::size_t n, double lambda, double current)
{
    const double s = lambda * static_cast<double>(n);
    const double cell = std::floor(s);
    const auto k = static_cast<std::size_t>(cell);
    const double theta = s - cell;
    if (k >= n) {
        return current;
    }
    if (theta == 0.0) {
        return z[k];
    }
    const double right = (k + 1 == n) ? current : z[k + 1];
    return (1.0 - theta) * z[k] + theta * right;
}

// Fixed-point solve of z = base + gain * f(z, y(z)), with Aitken extrapolation
// (Steffensen) on each pair of map evaluations. The plain map contracts slowly
// once gain * df/dz approaches 1, which happens at the ABC origin and for large r.
template <typename Eval>
double corrector(double guess, double base, double gain, const Eval& rhs_at, int iters, double tol, std::size_t step)
{
    const auto map = [&](double v) {
        const double next = base + gain * rhs_at(v);
        if (!std::isfinite(next)) {
            throw SolverFailure("corrector produced a non-finite value at step " + std::to_string(step), step);
        }
        return next;
    };
    double z = guess;
    for (int it = 0; it < iters; ++it) {
        const double g1 = map(z);
        if (std::fabs(g1 - z) <= tol * std::max(1.0, std::fabs(g1))) {
            return g1;
        }
        const double g2 = map(g1);
        const double curvature = g2 - 2.0 * g1 + z;
        const double jump = (g1 - z) * (g1 - z) / curvature;
        z = (curvature != 0.0 && std::isfinite(jump)) ? z - jump : g2;
    }
    const double last = map(z);
    const double residual = std::fabs(last - z);
    if (residual > kMaxAcceptedResidual) {
        throw SolverFailure("corrector did not contract at step " + std::to_string(step)
                                + " (residual " + std::to_string(residual) + ")",
                            step);
    }
    return last;
}

} // namespace

std::string_view to_string(OperatorKind op) noexcept
{
    switch (op) {
    case OperatorKind::ABC:
        return "abc";
    case OperatorKind::CFC:
        return "cfc";
    case OperatorKind::Caputo:
        return "caputo";
    }
    return "unknown";
}

OperatorKind parse_operator(std::string_view name)
{
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lower == "abc") {
        return OperatorKind::ABC;
    }
    if (lower == "cfc") {
        return OperatorKind::CFC;
    }
    if (lower == "caputo") {
        return OperatorKind::Caputo;
    }
    throw DomainError("operator must be one of abc, cfc, caputo");
}

void validate(const SolveConfig& cfg)
{
    if (!(cfg.h > 0.0) || !std::isfinite(cfg.h)) {
        throw DomainError("h must be positive");
    }
    if (!(cfg.t_end >= cfg.h) || !std::isfinite(cfg.t_end)) {
        throw DomainError("t-end must be at least h");
    }
    if (cfg.t_end / cfg.h > static_cast<double>(kMaxSolverSteps)) {
        throw DomainError("t-end / h exceeds the step limit");
    }
    if (cfg.corrector_iters < 1) {
        throw DomainError("corrector iterations must be positive");
    }
    if (!(cfg.corrector_tol >= 0.0)) {
        throw DomainError("corrector tolerance must be nonnegative");
    }
    if (!std::isfinite(cfg.forcing)) {
        throw DomainError("forcing must be finite");
    }
}

double Trajectory::at(double t) const
{
    if (grid.empty()) {
        throw DomainError("Trajectory::at on an empty trajectory");
    }
    if (!(t >= 0.0) || t > grid.back() * (1.0 + 1e-12)) {
        throw DomainError("Trajectory::at: t outside [0, t_end]");
    }
    const double h = step();
    if (h == 0.0) {
        return values.front();
    }
    const double s = t / h;
    auto k = static_cast<std::size_t>(std::floor(s));
    if (k + 1 >= grid.size()) {
        return values.back();
    }
    const double theta = s - static_cast<double>(k);
    return (1.0 - theta) * values[k] + theta * values[k + 1];
}

Trajectory solve(const ModelParams& p, const SolveConfig& cfg)
{
    validate(p);
    validate(cfg);

    const auto steps = static_cast<std::size_t>(std::max(1.0, std::ceil(cfg.t_end / cfg.h - 1e-9)));
    const double h = cfg.t_end / static_cast<double>(steps);
    const OperatorForm form = operator_form(cfg.op, p);
    const KernelWeights weights(form.kernel_order, h, steps, cfg.quadrature);
    const RightHandSide f(p, cfg);

    Trajectory out;
    out.op = cfg.op;
    out.params = p;
    out.grid.resize(steps + 1);
    for (std::size_t n = 0; n <= steps; ++n) {
        out.grid[n] = static_cast<double>(n) * h;
    }
    out.grid.back() = cfg.t_end;

    std::vector<double>& z = out.values;
    z.reserve(steps + 1);
    std::vector<double> rates;
    rates.reserve(steps + 1);

    // t = 0: z(lambda * 0) = z(0) for every lambda.
    double z_start = p.z0;
    if (form.pointwise != 0.0 && !form.subtract_initial_rate) {
        const auto at_origin = [&](double v) { return f(v, v); };
        z_start = corrector(p.z0, p.z0, form.pointwise, at_origin, std::max(kStartupIters, cfg.corrector_iters),
                            cfg.corrector_tol, 0);
    }
    z.push_back(z_start);
    rates.push_back(f(z_start, z_start));
    const double initial_offset = form.subtract_initial_rate ? form.pointwise * rates.front() : 0.0;

    const double gain = form.pointwise + form.memory * weights.diagonal();
    for (std::size_t n = 1; n <= steps; ++n) {
        const double base = p.z0 - initial_offset + form.memory * weights.history(n, rates);
        const auto rhs_at = [&](double v) {
            if (cfg.rhs == Nonlinearity::DelayedLogistic) {
                return f(v, delayed_value(z, n, p.lambda, v));
            }
            return f(v, v);
        };
        const double guess = n >= 2 ? 2.0 * z[n - 1] - z[n - 2] : z[n - 1];
        const double zn = corrector(guess, base, gain, rhs_at, cfg.corrector_iters, cfg.corrector_tol, n);
        z.push_back(zn);
        rates.push_back(rhs_at(zn));
    }
    return out;
}

OperatorComparison compare_operators(const ModelParams& p, const SolveConfig& cfg_base)
{
    SolveConfig cfg = cfg_base;
    cfg.op = OperatorKind::ABC;
    Trajectory abc = solve(p, cfg);
    cfg.op = OperatorKind::CFC;
    Trajectory cfc = solve(p, cfg);
    cfg.op = OperatorKind::Caputo;
    Trajectory caputo = solve(p, cfg);
    return {std::move(abc), std::move(cfc), std::move(caputo)};
}

} // namespace fraclog
