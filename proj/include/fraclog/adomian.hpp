#pragma once

#include "fraclog/sumudu_series.hpp"

#include <span>
#include <vector>

namespace fraclog {

// How the delayed product z(t) z(lambda t) is expanded.
enum class AdomianMode {
    // P_n = sum_{i+j=n} x_i(t) x_j(lambda t)
    General,
    // P_n = sum_{i+j=n} x_i(t) x_j(t); lambda is ignored inside the
    // nonlinearity: x0^2, 2 x0 x1, 2 x0 x2 + x1^2, ...
    Paper,
};

/// Adomian polynomials P_0..P_n of N[z] = z(t) z(lambda t) for the terms
/// x_0..x_n. Throws DomainError on empty input or lambda outside [0, 1],
/// OrderMismatch when the terms disagree on mu.
[[nodiscard]] std::vector<FracSeries> adomian_delayed_product(std::span<const FracSeries> terms,
                                                              double lambda,
                                                              AdomianMode mode = AdomianMode::General);

// Terms together with their polynomials; polys[k] depends on terms[0..k] only.
struct AdomianSequence {
    std::vector<FracSeries> terms;
    double lambda = 1.0;
    AdomianMode mode = AdomianMode::General;
    std::vector<FracSeries> polys;
};

[[nodiscard]] AdomianSequence make_adomian_sequence(std::vector<FracSeries> terms, double lambda,
                                                    AdomianMode mode = AdomianMode::General);

/// Only P_n. Depends on terms[0..n].
[[nodiscard]] FracSeries adomian_polynomial(std::span<const FracSeries> terms, std::size_t n, double lambda,
                                            AdomianMode mode = AdomianMode::General);

} // namespace fraclog
