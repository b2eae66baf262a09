#pragma once

#include "fraclog/adomian.hpp"
#include "fraclog/fode_solvers.hpp"
#include "fraclog/model.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace fraclog::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidArguments = 2,
    kSolverFailure = 3,
};

enum class Command {
    Classical,
    MlEval,
    ExactLambda0,
    Hsv,
    ClosedForm,
    Solve,
    Compare,
    Surface,
    Convergence,
    Stability,
};

enum class SweepAxis { None, Mu, Lambda, Both };

struct Sweep {
    SweepAxis axis = SweepAxis::None;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<double> step;
};

struct RunSpec {
    Command command = Command::Classical;
    ModelParams params;
    double t_end = 10.0;
    int points = 101;
    double h = 1e-2;
    OperatorKind op = OperatorKind::ABC;
    std::size_t n_terms = 10;
    std::size_t n_max = 8;
    AdomianMode mode = AdomianMode::General;
    Sweep sweep;
    double at_t = 5.0;
    double ml_from = -10.0;
    double ml_to = 10.0;
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
    std::string output;   // empty: standard output
};

/// Throws DomainError naming the offending field.
void validate(const RunSpec& spec);

/// Sweep values for one axis, ascending, rounded to 12 decimals.
[[nodiscard]] std::vector<double> sweep_values(double from, double to, double step);

/// Writes the CSV for spec to out. Solver and domain errors propagate.
void write_csv(const RunSpec& spec, std::ostream& out);

/// Full front end: parses argv, writes CSV to the requested sink and
/// diagnostics to err. Returns an ExitCode.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace fraclog::cli
