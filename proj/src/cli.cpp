#include "fraclog/cli.hpp"

#include "fraclog/closed_forms.hpp"
#include "fraclog/errors.hpp"
#include "fraclog/hsv.hpp"
#include "fraclog/special_functions.hpp"
#include "fraclog/stability.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>

namespace fraclog::cli {
namespace {

std::string num(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

class CsvWriter {
public:
    explicit CsvWriter(std::ostream& out) : out_(out) {}

    void header(std::initializer_list<std::string_view> names)
    {
        bool first = true;
        for (auto name : names) {
            if (!first) {
                out_ << ',';
            }
            out_ << name;
            first = false;
        }
        out_ << '\n';
    }

    void row(std::initializer_list<double> values)
    {
        bool first = true;
        for (double v : values) {
            if (!first) {
                out_ << ',';
            }
            out_ << num(v);
            first = false;
        }
        out_ << '\n';
    }

private:
    std::ostream& out_;
};

std::vector<double> time_grid(double t_end, int points)
{
    std::vector<double> t(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        t[static_cast<std::size_t>(i)] = t_end * static_cast<double>(i) / static_cast<double>(points - 1);
    }
    t.back() = t_end;
    return t;
}

SolveConfig solve_config(const RunSpec& spec)
{
    SolveConfig cfg;
    cfg.op = spec.op;
    cfg.t_end = spec.t_end;
    cfg.h = spec.h;
    return cfg;
}

struct AxisRange {
    double from;
    double to;
    double step;
};

AxisRange mu_axis(const Sweep& s)
{
    return {s.from.value_or(0.1), s.to.value_or(0.9), s.step.value_or(0.1)};
}

AxisRange lambda_axis(const Sweep& s)
{
    return {s.from.value_or(0.1), s.to.value_or(0.9), s.step.value_or(0.1)};
}

std::vector<double> axis_values(const AxisRange& a)
{
    return sweep_values(a.from, a.to, a.step);
}

void validate_axis(const AxisRange& a, bool is_mu)
{
    const char* name = is_mu ? "mu" : "lambda";
    if (!(a.step > 0.0)) {
        throw DomainError(std::string("step must be positive for the ") + name + " sweep");
    }
    if (!(a.from <= a.to)) {
        throw DomainError(std::string("from must not exceed to for the ") + name + " sweep");
    }
    const bool ok = is_mu ? (a.from > 0.0 && a.to <= 1.0) : (a.from >= 0.0 && a.to <= 1.0);
    if (!ok) {
        throw DomainError(std::string("from/to outside the ") + name + " domain");
    }
}

// Evaluates fn(value) for every sweep value concurrently; results keep sweep order.
template <typename Fn>
auto parallel_sweep(const std::vector<double>& values, Fn fn)
{
    using Result = decltype(fn(0.0));
    std::vector<std::future<Result>> jobs;
    jobs.reserve(values.size());
    for (double v : values) {
        jobs.push_back(std::async(std::launch::async, fn, v));
    }
    std::vector<Result> results;
    results.reserve(values.size());
    for (auto& j : jobs) {
        results.push_back(j.get());
    }
    return results;
}

void write_hsv_surface(const RunSpec& spec, CsvWriter& csv)
{
    const auto times = time_grid(spec.t_end, spec.points);
    const auto hsv_row = [&](ModelParams p) {
        const HsvSolution sol = hsv_iterate(p, spec.n_terms, spec.mode);
        std::vector<double> z;
        z.reserve(times.size());
        for (double t : times) {
            z.push_back(hsv_evaluate(sol, t).value);
        }
        return z;
    };

    switch (spec.sweep.axis) {
    case SweepAxis::Mu:
    case SweepAxis::Lambda: {
        const bool by_mu = spec.sweep.axis == SweepAxis::Mu;
        const auto values = axis_values(by_mu ? mu_axis(spec.sweep) : lambda_axis(spec.sweep));
        const auto rows = parallel_sweep(values, [&](double v) {
            ModelParams p = spec.params;
            (by_mu ? p.mu : p.lambda) = v;
            return hsv_row(p);
        });
        csv.header({"t", by_mu ? "mu" : "lambda", "z"});
        for (std::size_t i = 0; i < values.size(); ++i) {
            for (std::size_t j = 0; j < times.size(); ++j) {
                csv.row({times[j], values[i], rows[i][j]});
            }
        }
        break;
    }
    case SweepAxis::Both: {
        const auto mus = axis_values(mu_axis(spec.sweep));
        const auto lambdas = axis_values(lambda_axis(spec.sweep));
        const auto rows = parallel_sweep(mus, [&](double mu) {
            std::vector<double> z;
            for (double lambda : lambdas) {
                ModelParams p = spec.params;
                p.mu = mu;
                p.lambda = lambda;
                z.push_back(hsv_evaluate(hsv_iterate(p, spec.n_terms, spec.mode), spec.at_t).value);
            }
            return z;
        });
        csv.header({"mu", "lambda", "z"});
        for (std::size_t i = 0; i < mus.size(); ++i) {
            for (std::size_t j = 0; j < lambdas.size(); ++j) {
                csv.row({mus[i], lambdas[j], rows[i][j]});
            }
        }
        break;
    }
    case SweepAxis::None:
        throw DomainError("vary is required for surface (mu, lambda or both)");
    }
}

void write_exact_lambda0(const RunSpec& spec, CsvWriter& csv)
{
    const auto times = time_grid(spec.t_end, spec.points);
    if (spec.sweep.axis == SweepAxis::None) {
        csv.header({"t", "z"});
        for (double t : times) {
            csv.row({t, abc_exact_lambda0(spec.params, t)});
        }
        return;
    }
    if (spec.sweep.axis != SweepAxis::Mu) {
        throw DomainError("vary for exact-lambda0 must be mu");
    }
    const auto mus = axis_values(mu_axis(spec.sweep));
    csv.header({"t", "mu", "z"});
    for (double mu : mus) {
        ModelParams p = spec.params;
        p.mu = mu;
        for (double t : times) {
            csv.row({t, mu, abc_exact_lambda0(p, t)});
        }
    }
}

} // namespace

std::vector<double> sweep_values(double from, double to, double step)
{
    std::vector<double> out;
    const double slack = 1e-9 * step;
    for (long i = 0;; ++i) {
        const double v = std::round((from + static_cast<double>(i) * step) * 1e12) / 1e12;
        if (v > to + slack) {
            break;
        }
        out.push_back(v);
    }
    return out;
}

void validate(const RunSpec& spec)
{
    validate(spec.params);
    if (spec.points < 2) {
        throw DomainError("points must be at least 2");
    }
    if (!(spec.t_end > 0.0) || !std::isfinite(spec.t_end)) {
        throw DomainError("t-end must be positive");
    }
    if (spec.n_terms < 1) {
        throw DomainError("n-terms must be at least 1");
    }
    if (spec.n_max < 1) {
        throw DomainError("n-max must be at least 1");
    }
    switch (spec.command) {
    case Command::Solve:
    case Command::Compare:
    case Command::Stability: {
        validate(solve_config(spec));
        break;
    }
    case Command::Surface:
        if (spec.sweep.axis == SweepAxis::None) {
            throw DomainError("vary is required for surface (mu, lambda or both)");
        }
        if (spec.sweep.axis == SweepAxis::Lambda) {
            validate_axis(lambda_axis(spec.sweep), false);
        } else {
            validate_axis(mu_axis(spec.sweep), true);
        }
        if (spec.sweep.axis == SweepAxis::Both && !(spec.at_t >= 0.0)) {
            throw DomainError("at-t must be nonnegative");
        }
        break;
    case Command::ExactLambda0:
        if (spec.sweep.axis != SweepAxis::None) {
            if (spec.sweep.axis != SweepAxis::Mu) {
                throw DomainError("vary for exact-lambda0 must be mu");
            }
            validate_axis(mu_axis(spec.sweep), true);
        }
        break;
    case Command::MlEval:
        if (!(spec.ml_from <= spec.ml_to) || !std::isfinite(spec.ml_from) || !std::isfinite(spec.ml_to)) {
            throw DomainError("from must not exceed to");
        }
        break;
    default:
        break;
    }
    if (spec.command == Command::Stability) {
        const double limit = max_stability_epsilon(spec.params);
        if (spec.epsilons.empty()) {
            throw DomainError("epsilons must not be empty");
        }
        for (double e : spec.epsilons) {
            if (!(e > 0.0 && e <= limit)) {
                throw DomainError("epsilons must lie in (0, " + num(limit) + "]");
            }
        }
    }
}

void write_csv(const RunSpec& spec, std::ostream& out)
{
    validate(spec);
    CsvWriter csv(out);
    const auto times = time_grid(spec.t_end, spec.points);

    switch (spec.command) {
    case Command::Classical:
        csv.header({"t", "z"});
        for (double t : times) {
            csv.row({t, classical_exact(spec.params, t)});
        }
        break;
    case Command::MlEval: {
        csv.header({"arg", "e_mu"});
        for (int i = 0; i < spec.points; ++i) {
            const double x = i + 1 == spec.points
                                 ? spec.ml_to
                                 : spec.ml_from + (spec.ml_to - spec.ml_from) * i / (spec.points - 1);
            csv.row({x, mittag_leffler(MLParams{spec.params.mu, x})});
        }
        break;
    }
    case Command::ExactLambda0:
        write_exact_lambda0(spec, csv);
        break;
    case Command::Hsv: {
        const HsvSolution sol = hsv_iterate(spec.params, spec.n_terms, spec.mode);
        csv.header({"t", "z"});
        for (double t : times) {
            csv.row({t, hsv_evaluate(sol, t).value});
        }
        break;
    }
    case Command::ClosedForm: {
        // Evaluate everything first so a divergent q leaves no partial table.
        std::vector<double> z;
        z.reserve(times.size());
        for (double t : times) {
            z.push_back(paper_closed_form(spec.params, t).value);
        }
        csv.header({"t", "z"});
        for (std::size_t i = 0; i < times.size(); ++i) {
            csv.row({times[i], z[i]});
        }
        break;
    }
    case Command::Solve: {
        const Trajectory traj = solve(spec.params, solve_config(spec));
        csv.header({"t", "z"});
        for (double t : times) {
            csv.row({t, traj.at(t)});
        }
        break;
    }
    case Command::Compare: {
        const OperatorComparison cmp = compare_operators(spec.params, solve_config(spec));
        csv.header({"t", "z_abc", "z_cfc", "z_caputo"});
        for (double t : times) {
            csv.row({t, cmp.abc.at(t), cmp.cfc.at(t), cmp.caputo.at(t)});
        }
        break;
    }
    case Command::Surface:
        write_hsv_surface(spec, csv);
        break;
    case Command::Convergence: {
        const HsvSolution sol = hsv_iterate(spec.params, spec.n_max, spec.mode);
        csv.header({"n_terms", "t", "partial_sum", "last_term_abs"});
        for (std::size_t n = 1; n <= spec.n_max; ++n) {
            for (double t : times) {
                const HsvValue v = hsv_evaluate(sol, t, n);
                csv.row({static_cast<double>(n), t, v.value, v.last_term_abs});
            }
        }
        break;
    }
    case Command::Stability: {
        const StabilityReport report = hyers_ulam_probe(spec.params, solve_config(spec), spec.epsilons);
        csv.header({"epsilon", "max_deviation", "c_estimate"});
        for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
            csv.row({report.epsilons[i], report.deviations[i], report.c_estimates[i]});
        }
        break;
    }
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fractional logistic growth with proportional delay: closed forms, HSV series, numerical solvers"};
    app.set_help_flag("--help", "Print this help message and exit");   // --h is the step size
    app.set_config("--config", "", "Key-value config file mirroring the flags (flags win)");
    app.require_subcommand(1);
    app.fallthrough();

    RunSpec spec;
    std::string op_name = "abc";
    std::string mode_name = "general";
    std::string vary_name;
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;

    app.add_option("--r", spec.params.r, "Growth rate")->capture_default_str();
    app.add_option("--k", spec.params.K, "Carrying capacity")->capture_default_str();
    app.add_option("--z0", spec.params.z0, "Initial value")->capture_default_str();
    app.add_option("--mu", spec.params.mu, "Fractional order in (0, 1]")->capture_default_str();
    app.add_option("--lambda", spec.params.lambda, "Proportional delay factor in [0, 1]")->capture_default_str();
    app.add_option("--b-norm", spec.params.b_norm, "Normalization B(mu)")->capture_default_str();
    app.add_option("--t-end", spec.t_end, "Output horizon")->capture_default_str();
    app.add_option("--points", spec.points, "Output time points")->capture_default_str();
    app.add_option("--h", spec.h, "Solver step")->capture_default_str();
    app.add_option("--operator", op_name, "abc | cfc | caputo")->capture_default_str();
    app.add_option("--n-terms", spec.n_terms, "HSV truncation N")->capture_default_str();
    app.add_option("--n-max", spec.n_max, "Largest truncation for convergence")->capture_default_str();
    app.add_option("--mode", mode_name, "Adomian mode: general | paper")->capture_default_str();
    app.add_option("--vary", vary_name, "Sweep axis: mu | lambda | both");
    auto* from_opt = app.add_option("--from", from, "Sweep (or ml-eval argument) start");
    auto* to_opt = app.add_option("--to", to, "Sweep (or ml-eval argument) end");
    auto* step_opt = app.add_option("--step", step, "Sweep step");
    app.add_option("--at-t", spec.at_t, "Fixed time for surface --vary both")->capture_default_str();
    app.add_option("--epsilons", spec.epsilons, "Perturbation sizes, comma separated")->delimiter(',');
    app.add_option("--output", spec.output, "Output file (default: standard output)");

    const std::map<std::string, Command> commands{
        {"classical", Command::Classical},     {"ml-eval", Command::MlEval},
        {"exact-lambda0", Command::ExactLambda0}, {"hsv", Command::Hsv},
        {"closed-form", Command::ClosedForm},  {"solve", Command::Solve},
        {"compare", Command::Compare},         {"surface", Command::Surface},
        {"convergence", Command::Convergence}, {"stability", Command::Stability},
    };
    for (const auto& [name, cmd] : commands) {
        app.add_subcommand(name, "Emit the " + name + " dataset as CSV");
    }

    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) {
        args.emplace_back(argv[i]);
    }
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidArguments;
    }

    try {
        spec.command = commands.at(app.get_subcommands().front()->get_name());
        spec.op = parse_operator(op_name);
        if (mode_name == "general") {
            spec.mode = AdomianMode::General;
        } else if (mode_name == "paper") {
            spec.mode = AdomianMode::Paper;
        } else {
            throw DomainError("mode must be general or paper");
        }
        if (vary_name.empty()) {
            spec.sweep.axis = SweepAxis::None;
        } else if (vary_name == "mu") {
            spec.sweep.axis = SweepAxis::Mu;
        } else if (vary_name == "lambda") {
            spec.sweep.axis = SweepAxis::Lambda;
        } else if (vary_name == "both") {
            spec.sweep.axis = SweepAxis::Both;
        } else {
            throw DomainError("vary must be mu, lambda or both");
        }
        if (spec.command == Command::MlEval) {
            if (from_opt->count() > 0) {
                spec.ml_from = from;
            }
            if (to_opt->count() > 0) {
                spec.ml_to = to;
            }
        } else {
            if (from_opt->count() > 0) {
                spec.sweep.from = from;
            }
            if (to_opt->count() > 0) {
                spec.sweep.to = to;
            }
        }
        if (step_opt->count() > 0) {
            spec.sweep.step = step;
        }
        validate(spec);
    } catch (const std::exception& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kInvalidArguments;
    }

    std::ostringstream buffer;
    try {
        write_csv(spec, buffer);
    } catch (const SolverFailure& e) {
        err << "solver failure at step " << e.step() << ": " << e.what() << '\n';
        return kSolverFailure;
    } catch (const ConvergenceViolation& e) {
        err << "solver failure: " << e.what() << " (q = " << num(e.ratio()) << ")\n";
        return kSolverFailure;
    } catch (const SingularParameters& e) {
        err << "solver failure: " << e.what() << '\n';
        return kSolverFailure;
    } catch (const DomainError& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kInvalidArguments;
    }

    if (spec.output.empty()) {
        out << buffer.str();
        return kSuccess;
    }
    std::ofstream file(spec.output, std::ios::binary);
    if (!file) {
        err << "invalid argument: cannot open output " << spec.output << '\n';
        return kInvalidArguments;
    }
    file << buffer.str();
    return kSuccess;
}

} // namespace fraclog::cli
