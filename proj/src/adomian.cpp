#include "fraclog/adomian.hpp"

#include "fraclog/errors.hpp"

namespace fraclog {
namespace {

void validate(std::span<const FracSeries> terms, double lambda)
{
    if (terms.empty()) {
        throw DomainError("adomian: term list is empty");
    }
    if (!(lambda >= 0.0 && lambda <= 1.0)) {
        throw DomainError("adomian: lambda must lie in [0, 1]");
    }
    for (const auto& x : terms) {
        if (x.mu() != terms.front().mu()) {
            throw OrderMismatch("adomian: all terms must share one order mu");
        }
    }
}

FracSeries polynomial_unchecked(std::span<const FracSeries> terms, std::size_t n, double lambda, AdomianMode mode)
{
    FracSeries sum(terms.front().mu(), {0.0});
    for (std::size_t i = 0; i <= n; ++i) {
        const FracSeries& delayed_factor = terms[n - i];
        if (mode == AdomianMode::General) {
            sum += series_product(terms[i], delay_rescale(delayed_factor, lambda));
        } else {
            sum += series_product(terms[i], delayed_factor);
        }
    }
    return sum;
}

} // namespace

FracSeries adomian_polynomial(std::span<const FracSeries> terms, std::size_t n, double lambda, AdomianMode mode)
{
    validate(terms, lambda);
    if (n >= terms.size()) {
        throw DomainError("adomian: polynomial index exceeds available terms");
    }
    return polynomial_unchecked(terms, n, lambda, mode);
}

std::vector<FracSeries> adomian_delayed_product(std::span<const FracSeries> terms, double lambda, AdomianMode mode)
{
    validate(terms, lambda);
    std::vector<FracSeries> polys;
    polys.reserve(terms.size());
    for (std::size_t n = 0; n < terms.size(); ++n) {
        polys.push_back(polynomial_unchecked(terms, n, lambda, mode));
    }
    return polys;
}

AdomianSequence make_adomian_sequence(std::vector<FracSeries> terms, double lambda, AdomianMode mode)
{
    auto polys = adomian_delayed_product(terms, lambda, mode);
    return AdomianSequence{std::move(terms), lambda, mode, std::move(polys)};
}

} // namespace fraclog
