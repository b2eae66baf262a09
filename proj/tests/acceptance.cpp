// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include "fraclog/adomian.hpp"
#include "fraclog/cli.hpp"
#include "fraclog/closed_forms.hpp"
#include "fraclog/fode_solvers.hpp"
#include "fraclog/hsv.hpp"
#include "fraclog/special_functions.hpp"
#include "fraclog/stability.hpp"
#include "fraclog/sumudu_series.hpp"
#include "taylor_oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace fraclog;

namespace {

// Pinned tolerances.
constexpr double kMlExpTol = 1e-10;
constexpr double kMlHalfTol = 1e-8;
constexpr double kRoundTripTol = 1e-14;
constexpr double kAlgebraTol = 1e-15;       // linearity and distributivity, up to rounding
constexpr double kProductTol = 1e-12;
constexpr double kAdomianTol = 1e-12;
constexpr double kTermTol = 1e-12;
constexpr double kTaylorTol = 1e-10;
constexpr double kClassicalTol = 1e-4;
constexpr double kLambda0Tol = 1e-3;
constexpr double kOperatorTol = 1e-3;
constexpr double kHsvVsSolverTol = 0.05;    // the series is asymptotic in character
constexpr double kStabilitySpread = 3.0;
constexpr double kStabilityClosedTol = 1e-6;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double time_limit_s;
    std::function<Outcome()> check;
};

std::string fmt(const char* f, double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

FracSeries random_series(std::mt19937_64& rng, double mu, std::size_t n)
{
    std::uniform_real_distribution<double> dist(-2.0, 2.0);
    std::vector<double> c(n);
    for (auto& v : c) {
        v = dist(rng);
    }
    return FracSeries(mu, std::move(c));
}

template <typename A, typename B>
double rel_coeff_gap(const A& a, const B& b)
{
    double scale = 0.0;
    double gap = 0.0;
    for (std::size_t k = 0; k < std::max(a.size(), b.size()); ++k) {
        scale = std::max({scale, std::fabs(a[k]), std::fabs(b[k])});
        gap = std::max(gap, std::fabs(a[k] - b[k]));
    }
    return scale == 0.0 ? gap : gap / scale;
}

ModelParams defaults()
{
    ModelParams p;
    p.r = 0.1;
    p.K = 100.0;
    p.z0 = 10.0;
    p.mu = 0.9;
    p.lambda = 0.5;
    return p;
}

// 1. Mittag-Leffler against exp and the erfc identity.
Outcome mittag_leffler_correctness()
{
    double worst_exp = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double t = -10.0 + 20.0 * i / 99.0;
        worst_exp = std::max(worst_exp, std::fabs(mittag_leffler({1.0, t}) - std::exp(t)) / std::exp(t));
    }
    double worst_half = 0.0;
    for (int i = 0; i <= 300; ++i) {
        const double x = 3.0 * i / 300.0;
        const double want = std::exp(x * x) * std::erfc(-x);
        worst_half = std::max(worst_half, std::fabs(mittag_leffler({0.5, x}) - want) / want);
    }
    return {worst_exp < kMlExpTol && worst_half < kMlHalfTol,
            "E_1 vs exp " + fmt("%.2e", worst_exp) + ", E_1/2 vs erfc " + fmt("%.2e", worst_half)};
}

// 2. Sumudu algebra.
Outcome sumudu_algebra()
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> mu_dist(0.05, 1.0);
    double round_trip = 0.0;
    double linear = 0.0;
    double distrib = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double mu = mu_dist(rng);
        const FracSeries a = random_series(rng, mu, 8);
        const FracSeries b = random_series(rng, mu, 5);
        const FracSeries back = sumudu_inverse(sumudu_forward(a));
        for (std::size_t k = 0; k < a.size(); ++k) {
            round_trip = std::max(round_trip, std::fabs(back[k] - a[k]) / std::fabs(a[k]));
        }
        linear = std::max(linear, rel_coeff_gap(sumudu_forward(a * 1.5 + b * -0.25),
                                                sumudu_forward(a) * 1.5 + sumudu_forward(b) * -0.25));
        const SumuduSeries sa = sumudu_forward(a);
        const SumuduSeries sb = sumudu_forward(b);
        distrib = std::max(distrib, rel_coeff_gap(kernel_multiply(sa + sb), kernel_multiply(sa) + kernel_multiply(sb)));
    }
    double product = 0.0;
    for (int i = 0; i < 100; ++i) {
        const double mu = mu_dist(rng);
        const FracSeries a = random_series(rng, mu, 5);
        const FracSeries b = random_series(rng, mu, 5);
        const FracSeries ab = series_product(a, b);
        for (double t : {0.1, 0.5, 1.0, 2.0}) {
            double scale = 0.0;
            for (std::size_t k = 0; k < ab.size(); ++k) {
                scale += std::fabs(ab[k]) * std::pow(t, static_cast<double>(k) * mu);
            }
            product = std::max(product, std::fabs(eval_series(ab, t) - eval_series(a, t) * eval_series(b, t)) / scale);
        }
    }
    return {round_trip < kRoundTripTol && linear < kAlgebraTol && distrib < kAlgebraTol && product < kProductTol,
            "round trip " + fmt("%.2e", round_trip) + ", linearity " + fmt("%.2e", linear) + ", distributivity "
                + fmt("%.2e", distrib) + ", product " + fmt("%.2e", product)};
}

// 3. Adomian polynomials against the x_i x_j table and the truncated square.
Outcome adomian_fidelity()
{
    std::mt19937_64 rng(7);
    double table = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<FracSeries> x;
        for (std::size_t i = 0; i < 4; ++i) {
            x.push_back(random_series(rng, 0.5, i + 1));
        }
        const auto p = adomian_delayed_product(x, 1.0, AdomianMode::Paper);
        const auto prod = [](const FracSeries& a, const FracSeries& b) { return series_product(a, b); };
        table = std::max({table, rel_coeff_gap(p[0], prod(x[0], x[0])), rel_coeff_gap(p[1], prod(x[0], x[1]) * 2.0),
                          rel_coeff_gap(p[2], prod(x[0], x[2]) * 2.0 + prod(x[1], x[1])),
                          rel_coeff_gap(p[3], prod(x[0], x[3]) * 2.0 + prod(x[1], x[2]) * 2.0)});
    }
    double partial = 0.0;
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double mu = 0.3 + 0.005 * trial;
        std::vector<FracSeries> x;
        for (std::size_t i = 0; i < 5; ++i) {
            std::vector<double> c(i + 1, 0.0);
            c[i] = dist(rng);
            x.emplace_back(mu, std::move(c));
        }
        const auto p = adomian_delayed_product(x, 1.0);
        FracSeries sx(mu, {0.0});
        FracSeries sp(mu, {0.0});
        for (std::size_t n = 0; n < x.size(); ++n) {
            sx += x[n];
            sp += p[n];
            const FracSeries square = series_product(sx, sx);
            for (std::size_t k = 0; k <= n; ++k) {
                partial = std::max(partial, std::fabs(sp[k] - square[k]) / std::max(1.0, std::fabs(square[k])));
            }
        }
    }
    return {table < kAdomianTol && partial < kAdomianTol,
            "table " + fmt("%.2e", table) + ", partial sums " + fmt("%.2e", partial)};
}

// 4. HSV terms against closed-form x1, x2 and the classical Taylor polynomial.
Outcome hsv_term_fidelity()
{
    double terms = 0.0;
    for (double mu : {0.3, 0.6, 0.9}) {
        ModelParams p = defaults();
        p.mu = mu;
        p.lambda = 1.0;
        const HsvSolution sol = hsv_iterate(p, 2, AdomianMode::Paper);
        const double a1 = p.r * p.z0 / p.b_norm * (1.0 - p.z0 / p.K);
        const FracSeries x1_want(mu, {a1 * (1 - mu), a1 * mu / std::tgamma(mu + 1)});
        const double ratio = p.r / p.b_norm;
        const double c2 = p.z0 * ratio * ratio * (1 - p.z0 / p.K) * (1 - 2 * p.z0 / p.K);
        const FracSeries x2_want(mu, {c2 * (1 - mu) * (1 - mu), c2 * 2 * (1 - mu) * mu / std::tgamma(mu + 1),
                                      c2 * mu * mu / std::tgamma(2 * mu + 1)});
        terms = std::max({terms, rel_coeff_gap(sol.terms()[1], x1_want), rel_coeff_gap(sol.terms()[2], x2_want)});
    }
    double taylor = 0.0;
    for (double z0 : {5.0, 10.0, 60.0}) {
        ModelParams p = defaults();
        p.mu = 1.0;
        p.lambda = 1.0;
        p.r = 0.7;
        p.z0 = z0;
        const HsvSolution sol = hsv_iterate(p, 3);
        const auto want = testing::logistic_taylor(p.r, p.K, p.z0, 3);
        FracSeries partial(1.0, {0.0});
        for (std::size_t n = 0; n <= 3; ++n) {
            partial += sol.terms()[n];
            for (std::size_t k = 0; k <= n; ++k) {
                taylor = std::max(taylor, std::fabs(partial[k] - want[k]) / std::max(1.0, std::fabs(want[k])));
            }
        }
    }
    return {terms < kTermTol && taylor < kTaylorTol,
            "x1/x2 " + fmt("%.2e", terms) + ", Taylor N<=3 " + fmt("%.2e", taylor)};
}

// 5. Caputo at mu = 1 against the classical solution.
Outcome classical_oracle()
{
    ModelParams p = defaults();
    p.r = 1.0;
    p.mu = 1.0;
    p.lambda = 1.0;
    const auto error_at = [&](double h) {
        SolveConfig c;
        c.op = OperatorKind::Caputo;
        c.t_end = 5.0;
        c.h = h;
        const Trajectory tr = solve(p, c);
        double err = 0.0;
        for (std::size_t i = 0; i < tr.grid.size(); ++i) {
            const double want = classical_exact(p, tr.grid[i]);
            err = std::max(err, std::fabs(tr.values[i] - want) / want);
        }
        return err;
    };
    const double coarse = error_at(1e-3);
    const double fine = error_at(5e-4);
    return {coarse < kClassicalTol && fine < coarse,
            "h=1e-3 " + fmt("%.2e", coarse) + ", h=5e-4 " + fmt("%.2e", fine)};
}

// 6. ABC on the lambda = 0 linear problem against A E_mu(q t^mu).
Outcome lambda0_oracle()
{
    double worst = 0.0;
    for (double mu : {0.5, 0.8}) {
        ModelParams p = defaults();
        p.mu = mu;
        p.lambda = 0.0;
        SolveConfig c;
        c.op = OperatorKind::ABC;
        c.t_end = 5.0;
        c.h = 1e-3;
        c.rhs = Nonlinearity::FrozenLinear;
        const Trajectory tr = solve(p, c);
        for (std::size_t i = 1; i < tr.grid.size(); ++i) {
            const double want = abc_exact_lambda0(p, tr.grid[i]);
            worst = std::max(worst, std::fabs(tr.values[i] - want) / want);
        }
    }
    return {worst < kLambda0Tol, "max rel error " + fmt("%.2e", worst)};
}

// 7. The three operators coincide at mu = 1.
Outcome operator_coincidence()
{
    ModelParams p = defaults();
    p.mu = 1.0;
    p.lambda = 1.0;
    SolveConfig c;
    c.t_end = 10.0;
    c.h = 1e-2;
    const OperatorComparison cmp = compare_operators(p, c);
    double worst = 0.0;
    for (std::size_t i = 0; i < cmp.abc.values.size(); ++i) {
        const double a = cmp.abc.values[i];
        const double f = cmp.cfc.values[i];
        const double k = cmp.caputo.values[i];
        worst = std::max({worst, std::fabs(a - f) / a, std::fabs(a - k) / a, std::fabs(f - k) / f});
    }
    return {worst < kOperatorTol, "max pairwise rel gap " + fmt("%.2e", worst)};
}

// 8. HSV partial sum against the ABC solver.
Outcome hsv_vs_solver()
{
    ModelParams p = defaults();
    p.lambda = 1.0;
    const HsvSolution sol = hsv_iterate(p, 10, AdomianMode::General);
    SolveConfig c;
    c.op = OperatorKind::ABC;
    c.t_end = 0.5;
    c.h = 1e-3;
    const Trajectory tr = solve(p, c);
    double worst = 0.0;
    for (std::size_t i = 0; i < tr.grid.size(); ++i) {
        const double z = tr.values[i];
        worst = std::max(worst, std::fabs(hsv_evaluate(sol, tr.grid[i]).value - z) / z);
    }
    return {worst < kHsvVsSolverTol, "max rel gap " + fmt("%.2e", worst) + " (limit " + fmt("%.2g", kHsvVsSolverTol) + ")"};
}

// 9. Hyers-Ulam probe.
Outcome hyers_ulam()
{
    const std::vector<double> eps{1e-2, 1e-3, 1e-4};
    SolveConfig c;
    c.t_end = 10.0;
    c.h = 1e-2;
    const StabilityReport rep = hyers_ulam_probe(defaults(), c, eps);
    const auto [lo, hi] = std::minmax_element(rep.c_estimates.begin(), rep.c_estimates.end());
    const double spread = *hi / *lo;

    ModelParams still = defaults();
    still.r = 0.0;
    const StabilityReport flat = hyers_ulam_probe(still, c, eps);
    const double mu = still.mu;
    const double b = still.b_norm;
    const double t = flat.horizon;
    double closed = 0.0;
    for (std::size_t i = 0; i < eps.size(); ++i) {
        const double want = eps[i] * ((1.0 - mu) / b + mu * std::pow(t, mu) / (b * std::tgamma(mu + 1.0)));
        closed = std::max(closed, std::fabs(flat.deviations[i] - want) / want);
    }
    return {spread < kStabilitySpread && closed < kStabilityClosedTol,
            "C spread " + fmt("%.4f", spread) + ", r=0 closed form " + fmt("%.2e", closed)};
}

// 10. Figure commands, run through the CLI front end.
struct Csv {
    int code = -1;
    double seconds = 0.0;
    std::vector<std::vector<double>> rows;
};

Csv run_cli(std::vector<std::string> args)
{
    args.insert(args.begin(), "fraclog");
    std::vector<const char*> argv;
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const auto start = std::chrono::steady_clock::now();
    Csv csv;
    csv.code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    csv.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<double> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(std::stod(cell));
        }
        csv.rows.push_back(std::move(row));
    }
    return csv;
}

constexpr double kFigureTimeLimit = 60.0;

Outcome figure_reproduction()
{
    std::string detail;
    bool pass = true;
    double slowest = 0.0;
    const auto note = [&](const char* what, bool ok) {
        detail += std::string(detail.empty() ? "" : ", ") + what + (ok ? " ok" : " FAIL");
        pass = pass && ok;
    };

    const Csv classical = run_cli({"classical", "--r", "1", "--t-end", "40"});
    bool ok = classical.code == 0 && std::fabs(classical.rows.back()[1] - 100.0) < 1e-6;
    for (std::size_t i = 1; ok && i < classical.rows.size(); ++i) {
        ok = classical.rows[i][1] >= classical.rows[i - 1][1] && classical.rows[i][1] <= 100.0;
    }
    note("classical", ok);
    slowest = std::max(slowest, classical.seconds);

    // Rows: mu outer, t inner.
    const Csv lambda0 = run_cli({"exact-lambda0", "--vary", "mu"});
    ok = lambda0.code == 0 && lambda0.rows.size() == 9 * 101;
    std::vector<double> finals;
    for (std::size_t i = 0; ok && i < lambda0.rows.size(); ++i) {
        if (i % 101 != 0) {
            ok = lambda0.rows[i][2] > lambda0.rows[i - 1][2];
        }
        if (i % 101 == 100) {
            finals.push_back(lambda0.rows[i][2]);
        }
    }
    ok = ok && std::is_sorted(finals.begin(), finals.end(), std::less_equal<>());
    note("exact-lambda0", ok);
    slowest = std::max(slowest, lambda0.seconds);

    // Rows: lambda outer, t inner. Same direction in lambda at every t > 0.
    const Csv surface = run_cli({"surface", "--vary", "lambda"});
    ok = surface.code == 0 && surface.rows.size() == 9 * 101;
    int direction = 0;
    for (std::size_t j = 1; ok && j < 101; ++j) {
        for (std::size_t i = 1; ok && i < 9; ++i) {
            const double prev = surface.rows[(i - 1) * 101 + j][2];
            const double cur = surface.rows[i * 101 + j][2];
            const int d = cur > prev ? 1 : (cur < prev ? -1 : 0);
            if (direction == 0) {
                direction = d;
            }
            ok = d != 0 && d == direction;
        }
    }
    note("surface --vary lambda", ok);
    slowest = std::max(slowest, surface.seconds);

    // The convergence figure is drawn for the classical model; small r t.
    const Csv conv = run_cli({"convergence", "--mu", "1", "--lambda", "1", "--n-max", "8", "--t-end", "2", "--points", "21"});
    ok = conv.code == 0 && conv.rows.size() == 8 * 21;
    for (std::size_t j = 1; ok && j < 21; ++j) {
        for (std::size_t n = 1; ok && n < 8; ++n) {
            ok = conv.rows[n * 21 + j][3] < conv.rows[(n - 1) * 21 + j][3];
        }
    }
    note("convergence", ok);
    slowest = std::max(slowest, conv.seconds);

    const bool fast = slowest < kFigureTimeLimit;
    return {pass && fast, detail + ", slowest " + fmt("%.2f", slowest) + " s"};
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "Mittag-Leffler correctness", 1.0, mittag_leffler_correctness},
        {2, "Sumudu algebra", 5.0, sumudu_algebra},
        {3, "Adomian fidelity", 2.0, adomian_fidelity},
        {4, "HSV term fidelity", 2.0, hsv_term_fidelity},
        {5, "Classical oracle", 10.0, classical_oracle},
        {6, "lambda = 0 oracle", 20.0, lambda0_oracle},
        {7, "Operator coincidence at mu = 1", 10.0, operator_coincidence},
        {8, "HSV vs numerical solver", 5.0, hsv_vs_solver},
        {9, "Hyers-Ulam probe", 10.0, hyers_ulam},
        {10, "Figure reproduction", 4 * kFigureTimeLimit, figure_reproduction},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.time_limit_s;
        const bool pass = o.pass && in_time;
        failures += pass ? 0 : 1;
        std::printf("%s [%d] %s: %s; %.3f s (limit %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    seconds, c.time_limit_s, in_time ? "" : " TOO SLOW");
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
