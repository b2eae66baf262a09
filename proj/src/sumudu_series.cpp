#include "fraclog/sumudu_series.hpp"

#include "fraclog/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace fraclog {
namespace detail {

template <typename Tag>
LatticeSeries<Tag>::LatticeSeries(double mu, std::vector<double> coeffs)
    : mu_(mu), coeffs_(std::move(coeffs))
{
    if (!(mu_ > 0.0 && mu_ <= 1.0)) {
        throw DomainError("series order mu must lie in (0, 1], got " + std::to_string(mu_));
    }
    if (coeffs_.empty()) {
        throw DomainError("series needs at least one coefficient");
    }
    if (!std::all_of(coeffs_.begin(), coeffs_.end(), [](double c) { return std::isfinite(c); })) {
        throw DomainError("series coefficients must be finite");
    }
}

template <typename Tag>
LatticeSeries<Tag> LatticeSeries<Tag>::trimmed() const
{
    std::size_t n = coeffs_.size();
    while (n > 1 && std::fabs(coeffs_[n - 1]) < kTrimThreshold) {
        --n;
    }
    return LatticeSeries(mu_, std::vector<double>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

template <typename Tag>
LatticeSeries<Tag>& LatticeSeries<Tag>::operator+=(const LatticeSeries& other)
{
    if (other.mu_ != mu_) {
        throw OrderMismatch("cannot add series of different order");
    }
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    return *this;
}

template <typename Tag>
LatticeSeries<Tag>& LatticeSeries<Tag>::operator-=(const LatticeSeries& other)
{
    if (other.mu_ != mu_) {
        throw OrderMismatch("cannot subtract series of different order");
    }
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size(), 0.0);
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    return *this;
}

template <typename Tag>
LatticeSeries<Tag>& LatticeSeries<Tag>::operator*=(double scale) noexcept
{
    for (double& c : coeffs_) {
        c *= scale;
    }
    return *this;
}

template class LatticeSeries<TimeTag>;
template class LatticeSeries<SumuduTag>;

} // namespace detail

namespace {

double lattice_gamma(std::size_t k, double mu)
{
    return std::tgamma(static_cast<double>(k) * mu + 1.0);
}

template <typename Series>
Series cauchy_product(const Series& a, const Series& b)
{
    if (a.mu() != b.mu()) {
        throw OrderMismatch("series_product: order mismatch");
    }
    std::vector<double> out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return Series(a.mu(), std::move(out));
}

} // namespace

SumuduSeries sumudu_forward(const FracSeries& s)
{
    std::vector<double> d(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        d[k] = s[k] * lattice_gamma(k, s.mu());
    }
    return SumuduSeries(s.mu(), std::move(d));
}

FracSeries sumudu_inverse(const SumuduSeries& s)
{
    std::vector<double> c(s.size());
    for (std::size_t k = 0; k < s.size(); ++k) {
        c[k] = s[k] / lattice_gamma(k, s.mu());
    }
    return FracSeries(s.mu(), std::move(c));
}

SumuduSeries kernel_multiply(const SumuduSeries& s)
{
    const double mu = s.mu();
    std::vector<double> e(s.size() + 1, 0.0);
    for (std::size_t k = 0; k < e.size(); ++k) {
        const double here = k < s.size() ? s[k] : 0.0;
        const double below = k > 0 ? s[k - 1] : 0.0;
        e[k] = (1.0 - mu) * here + mu * below;
    }
    return SumuduSeries(mu, std::move(e));
}

FracSeries series_product(const FracSeries& a, const FracSeries& b)
{
    return cauchy_product(a, b);
}

SumuduSeries series_product(const SumuduSeries& a, const SumuduSeries& b)
{
    return cauchy_product(a, b);
}

FracSeries delay_rescale(const FracSeries& s, double lambda)
{
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("delay_rescale: lambda must lie in [0, 1]");
    }
    std::vector<double> c(s.size());
    c[0] = s[0];
    for (std::size_t k = 1; k < s.size(); ++k) {
        // pow(0, positive) is exactly 0, so lambda = 0 keeps only c_0.
        c[k] = s[k] * std::pow(lambda, static_cast<double>(k) * s.mu());
    }
    return FracSeries(s.mu(), std::move(c));
}

double eval_series(const FracSeries& s, double t)
{
    if (!(t >= 0.0)) {
        throw DomainError("eval_series: t must be nonnegative");
    }
    if (t == 0.0) {
        return s[0];
    }
    const double log_t = std::log(t);
    double sum = s[0];
    for (std::size_t k = 1; k < s.size(); ++k) {
        sum += s[k] * std::exp(static_cast<double>(k) * s.mu() * log_t);
    }
    return sum;
}

FracSeries convolve(const FracSeries& f, const FracSeries& g)
{
    if (f.mu() != 1.0 || g.mu() != 1.0) {
        throw Unsupported("convolve: only integer-power series (mu = 1) are supported");
    }
    std::vector<double> out(f.size() + g.size(), 0.0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = 0; j < g.size(); ++j) {
            // B(i+1, j+1) = i! j! / (i+j+1)!
            const double beta = std::exp(std::lgamma(i + 1.0) + std::lgamma(j + 1.0) - std::lgamma(i + j + 2.0));
            out[i + j + 1] += f[i] * g[j] * beta;
        }
    }
    return FracSeries(1.0, std::move(out));
}

bool convolution_check(const FracSeries& f, const FracSeries& g, double rel_tol)
{
    const SumuduSeries lhs = sumudu_forward(convolve(f, g));
    const SumuduSeries prod = series_product(sumudu_forward(f), sumudu_forward(g));
    // Shift by one: multiplication by u.
    std::vector<double> shifted(prod.size() + 1, 0.0);
    std::copy(prod.coeffs().begin(), prod.coeffs().end(), shifted.begin() + 1);
    const SumuduSeries rhs(1.0, std::move(shifted));

    const std::size_t n = std::max(lhs.size(), rhs.size());
    double scale = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        scale = std::max({scale, std::fabs(lhs[k]), std::fabs(rhs[k])});
    }
    for (std::size_t k = 0; k < n; ++k) {
        if (std::fabs(lhs[k] - rhs[k]) > rel_tol * scale) {
            return false;
        }
    }
    return true;
}

} // namespace fraclog
