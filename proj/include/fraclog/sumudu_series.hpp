#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace fraclog {

// Coefficients below this magnitude at the tail are dropped by trimmed().
inline constexpr double kTrimThreshold = 1e-300;

namespace detail {

// Shared storage for the two series lattices. Tag keeps the time-domain and
// Sumudu-domain types distinct so they cannot be mixed by accident.
template <typename Tag>
class LatticeSeries {
public:
    LatticeSeries(double mu, std::vector<double> coeffs);

    [[nodiscard]] double mu() const noexcept { return mu_; }
    [[nodiscard]] std::span<const double> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }
    [[nodiscard]] double operator[](std::size_t k) const noexcept
    {
        return k < coeffs_.size() ? coeffs_[k] : 0.0;
    }

    /// Copy with trailing |c| < kTrimThreshold removed (length stays >= 1).
    [[nodiscard]] LatticeSeries trimmed() const;

    LatticeSeries& operator+=(const LatticeSeries& other);
    LatticeSeries& operator-=(const LatticeSeries& other);
    LatticeSeries& operator*=(double scale) noexcept;

    friend LatticeSeries operator+(LatticeSeries a, const LatticeSeries& b) { return a += b; }
    friend LatticeSeries operator-(LatticeSeries a, const LatticeSeries& b) { return a -= b; }
    friend LatticeSeries operator*(LatticeSeries a, double s) { return a *= s; }
    friend LatticeSeries operator*(double s, LatticeSeries a) { return a *= s; }

    // Exact coefficient equality after trimming.
    friend bool operator==(const LatticeSeries& a, const LatticeSeries& b)
    {
        const auto at = a.trimmed();
        const auto bt = b.trimmed();
        return at.mu_ == bt.mu_ && at.coeffs_ == bt.coeffs_;
    }

private:
    double mu_;
    std::vector<double> coeffs_;
};

struct TimeTag;
struct SumuduTag;

} // namespace detail

/// sum_k c_k t^(k mu)
using FracSeries = detail::LatticeSeries<detail::TimeTag>;
/// sum_k d_k u^(k mu)
using SumuduSeries = detail::LatticeSeries<detail::SumuduTag>;

/// d_k = c_k Gamma(k mu + 1).
[[nodiscard]] SumuduSeries sumudu_forward(const FracSeries& s);

/// c_k = d_k / Gamma(k mu + 1).
[[nodiscard]] FracSeries sumudu_inverse(const SumuduSeries& s);

/// Multiply by (1 - mu + mu u^mu): e_k = (1 - mu) d_k + mu d_{k-1}.
[[nodiscard]] SumuduSeries kernel_multiply(const SumuduSeries& s);

/// Cauchy product in the t^mu lattice. Throws OrderMismatch.
[[nodiscard]] FracSeries series_product(const FracSeries& a, const FracSeries& b);

/// Cauchy product in the u^mu lattice.
[[nodiscard]] SumuduSeries series_product(const SumuduSeries& a, const SumuduSeries& b);

/// Series of w(lambda t): c_k -> c_k lambda^(k mu). Throws DomainError for
/// lambda outside [0, 1].
[[nodiscard]] FracSeries delay_rescale(const FracSeries& s, double lambda);

/// Evaluate at t >= 0; t = 0 returns c_0 exactly. Throws DomainError for t < 0.
[[nodiscard]] double eval_series(const FracSeries& s, double t);

/// Time-domain convolution (f * g)(t) = int_0^t f(t - x) g(x) dx for integer
/// power series (mu = 1), via t^i * t^j = B(i+1, j+1) t^(i+j+1).
/// Throws Unsupported for mu != 1.
[[nodiscard]] FracSeries convolve(const FracSeries& f, const FracSeries& g);

/// Checks S[f * g] = u F(u) G(u) coefficientwise to `rel_tol`. Throws
/// Unsupported unless both series have mu = 1.
[[nodiscard]] bool convolution_check(const FracSeries& f, const FracSeries& g, double rel_tol = 1e-12);

} // namespace fraclog
