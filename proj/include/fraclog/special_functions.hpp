#pragma once

namespace fraclog {

// Argument pair for the one-parameter Mittag-Leffler function E_mu(arg).
struct MLParams {
    double mu = 1.0;   // order, 0 < mu <= 1
    double arg = 0.0;
};

/// Relative cutoff for the Mittag-Leffler Taylor series: summation stops once
/// the next term falls below this fraction of the running sum.
inline constexpr double kMittagLefflerSeriesCutoff = 1e-16;

/// Arguments below this value use the leading asymptotic term.
inline constexpr double kMittagLefflerAsymptoticThreshold = -50.0;

/// Gamma function for x > 0. Throws DomainError otherwise.
[[nodiscard]] double gamma_fn(double x);

/// ln Gamma(x) for x > 0.
[[nodiscard]] double log_gamma(double x);

/**
 * One-parameter Mittag-Leffler function E_mu(z) = sum_n z^n / Gamma(n mu + 1).
 *
 * - z >= 0: Taylor series with Neumaier-compensated summation; terms are
 *   formed in log space so Gamma(n mu + 1) never overflows. Returns +inf when
 *   the result exceeds the double range.
 * - -1 <= z < 0: Taylor series (no harmful cancellation in this range).
 * - mu = 1, z < -1: reciprocal of the series at -z.
 * - -50 <= z < -1: the Laplace-type representation
 *       E_mu(-x) = sin(mu pi)/(mu pi) * int_0^inf exp(-(x s)^(1/mu)) / (s^2 + 2 s cos(mu pi) + 1) ds
 *   evaluated by adaptive Gauss-Kronrod quadrature. The alternating Taylor
 *   series loses all accuracy here.
 * - mu < 1, z < -50: leading asymptotic term 1 / (|z| Gamma(1 - mu)). Relative error
 *   is O(1/|z|) in general, so roughly 2% at z = -50.
 *
 * Throws DomainError for mu outside (0, 1] or non-finite z.
 */
[[nodiscard]] double mittag_leffler(const MLParams& p);

/// Same as above, with an explicit relative series cutoff (used to check
/// truncation sensitivity). Only affects the Taylor branches.
[[nodiscard]] double mittag_leffler(const MLParams& p, double series_cutoff);

} // namespace fraclog
