#include "fraclog/hsv.hpp"

#include "fraclog/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fraclog {

HsvSolution::HsvSolution(ModelParams params, std::vector<FracSeries> terms, AdomianMode mode)
    : params_(params), terms_(std::move(terms)), mode_(mode)
{
    if (terms_.empty()) {
        throw DomainError("HsvSolution needs at least x_0");
    }
}

HsvSolution hsv_iterate(const ModelParams& p, std::size_t n_terms, AdomianMode mode)
{
    validate(p);
    if (n_terms == 0) {
        throw DomainError("n-terms must be at least 1");
    }
    const double scale = p.r / p.b_norm;
    std::vector<FracSeries> terms;
    terms.reserve(n_terms + 1);
    terms.emplace_back(p.mu, std::vector<double>{p.z0});

    for (std::size_t n = 0; n < n_terms; ++n) {
        const FracSeries poly = adomian_polynomial(terms, n, p.lambda, mode);
        SumuduSeries image = sumudu_forward(terms[n]) - sumudu_forward(poly) * (1.0 / p.K);
        image = kernel_multiply(image) * scale;
        terms.push_back(sumudu_inverse(image));
    }
    return HsvSolution(p, std::move(terms), mode);
}

HsvValue hsv_evaluate(const HsvSolution& sol, double t, std::size_t n)
{
    if (!(t >= 0.0)) {
        throw DomainError("hsv_evaluate: t must be nonnegative");
    }
    if (n > sol.truncation()) {
        throw DomainError("hsv_evaluate: requested more terms than were generated");
    }
    HsvValue out;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = eval_series(sol.terms()[i], t);
        out.value += x;
        out.last_term_abs = std::fabs(x);
    }
    return out;
}

HsvValue hsv_evaluate(const HsvSolution& sol, double t)
{
    return hsv_evaluate(sol, t, sol.truncation());
}

ClosedFormValue paper_closed_form(const ModelParams& p, double t)
{
    validate(p);
    if (!(t >= 0.0)) {
        throw DomainError("paper_closed_form: t must be nonnegative");
    }
    const double psi = 1.0 - p.mu + p.mu * std::pow(t, p.mu) / std::tgamma(p.mu + 1.0);
    const double q = (p.r / p.b_norm) * logistic_headroom(p) * psi;
    if (!(std::fabs(q) < 1.0)) {
        throw ConvergenceViolation("geometric closed form diverges: |q| = " + std::to_string(std::fabs(q))
                                       + " at t = " + std::to_string(t),
                                   q);
    }
    return ClosedFormValue{p.z0 / (1.0 - q), q};
}

SecondTermDiagnostic second_term_factorization_gap(const ModelParams& p)
{
    const HsvSolution sol = hsv_iterate(p, 2, AdomianMode::Paper);
    const double ratio = p.r / p.b_norm;
    const double c2 = p.z0 * ratio * ratio * logistic_headroom(p) * (1.0 - 2.0 * p.z0 / p.K);
    const FracSeries psi(p.mu, {1.0 - p.mu, p.mu / std::tgamma(p.mu + 1.0)});
    FracSeries factored = series_product(psi, psi) * c2;

    const FracSeries& exact = sol.terms()[2];
    double gap = 0.0;
    for (std::size_t k = 0; k < std::max(exact.size(), factored.size()); ++k) {
        gap = std::max(gap, std::fabs(exact[k] - factored[k]));
    }
    return SecondTermDiagnostic{exact, std::move(factored), gap};
}

} // namespace fraclog
