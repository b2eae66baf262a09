#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fraclog {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Binary operation on series of different fractional order.
class OrderMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Unsupported : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Parameter combination that makes a closed form singular.
class SingularParameters : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// The geometric closed form needs |q| < 1.
class ConvergenceViolation : public std::runtime_error {
public:
    ConvergenceViolation(const std::string& what, double ratio)
        : std::runtime_error(what), ratio_(ratio) {}

    [[nodiscard]] double ratio() const noexcept { return ratio_; }

private:
    double ratio_;
};

class SolverFailure : public std::runtime_error {
public:
    SolverFailure(const std::string& what, std::size_t step)
        : std::runtime_error(what), step_(step) {}

    [[nodiscard]] std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

} // namespace fraclog
