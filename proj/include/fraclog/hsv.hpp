#pragma once

#include "fraclog/adomian.hpp"
#include "fraclog/model.hpp"
#include "fraclog/sumudu_series.hpp"

#include <cstddef>
#include <vector>

namespace fraclog {

inline constexpr std::size_t kDefaultHsvTerms = 10;

// Truncated series solution x_0 + x_1 + ... + x_N. Immutable once built.
class HsvSolution {
public:
    HsvSolution(ModelParams params, std::vector<FracSeries> terms, AdomianMode mode);

    [[nodiscard]] const ModelParams& params() const noexcept { return params_; }
    [[nodiscard]] const std::vector<FracSeries>& terms() const noexcept { return terms_; }
    [[nodiscard]] std::size_t truncation() const noexcept { return terms_.size() - 1; }
    [[nodiscard]] AdomianMode mode() const noexcept { return mode_; }

private:
    ModelParams params_;
    std::vector<FracSeries> terms_;
    AdomianMode mode_;
};

struct HsvValue {
    double value = 0.0;
    double last_term_abs = 0.0;   // |x_N(t)|, a truncation-error proxy
};

/**
 * Variational iteration in the Sumudu domain:
 *
 *   x_0 = z0
 *   x_{n+1} = (r / B) S^-1[ (1 - mu + mu u^mu) (S[x_n] - S[P_n] / K) ]
 *
 * with P_n the Adomian polynomial of z(t) z(lambda t). Produces x_0..x_{n_terms}.
 * Every x_n with n >= 1 lives in the t^mu lattice with at most n + 1 coefficients.
 */
[[nodiscard]] HsvSolution hsv_iterate(const ModelParams& p, std::size_t n_terms,
                                      AdomianMode mode = AdomianMode::General);

/// Partial sum at t >= 0 plus |x_N(t)|.
[[nodiscard]] HsvValue hsv_evaluate(const HsvSolution& sol, double t);

/// Partial sum using only x_0..x_n (n <= truncation()).
[[nodiscard]] HsvValue hsv_evaluate(const HsvSolution& sol, double t, std::size_t n);

struct ClosedFormValue {
    double value = 0.0;
    double ratio = 0.0;   // q
};

/**
 * Geometric approximation z0 / (1 - q), q = (r / B)(1 - z0/K) psi(t),
 * psi(t) = 1 - mu + mu t^mu / Gamma(mu + 1). Throws ConvergenceViolation when |q| >= 1.
 */
[[nodiscard]] ClosedFormValue paper_closed_form(const ModelParams& p, double t);

// Coefficients of the factored form of x_2, c2 * psi(t)^2 expanded in the t^mu
// lattice, next to the exact Sumudu-domain x_2. They differ unless
// Gamma(mu+1)^2 = Gamma(2 mu + 1).
struct SecondTermDiagnostic {
    FracSeries exact;
    FracSeries factored;
    double max_abs_difference = 0.0;
};

[[nodiscard]] SecondTermDiagnostic second_term_factorization_gap(const ModelParams& p);

} // namespace fraclog
