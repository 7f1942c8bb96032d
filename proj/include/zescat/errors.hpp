#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace zescat {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A result (or an intermediate prefactor) is not representable as a double.
class OverflowError : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

// PotentialParams failed validation. Carries every violated constraint.
class ValidationError : public std::invalid_argument {
public:
    explicit ValidationError(std::vector<std::string> violations);

    const std::vector<std::string>& violations() const noexcept { return violations_; }

private:
    std::vector<std::string> violations_;
};

// The ODE integrator could not continue.
class IntegrationError : public std::runtime_error {
public:
    IntegrationError(const std::string& what, double radius)
        : std::runtime_error(what), radius_(radius) {}

    // Radius at which integration failed.
    double radius() const noexcept { return radius_; }

private:
    double radius_;
};

// Series or least-squares failure (non-convergence, degenerate window, rank deficiency).
class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace zescat
