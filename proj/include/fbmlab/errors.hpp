#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fbmlab {

// Argument outside the mathematical domain of the routine (H, alpha, u, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Caller broke a structural precondition (grid shape, missing origin, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Quadrature or factorisation did not reach the requested accuracy.
class NumericError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A coefficient table contains a negative variance b_n.
class CoefficientError : public std::runtime_error {
public:
    CoefficientError(std::size_t first_bad_n, double value)
        : std::runtime_error("negative coefficient b_" + std::to_string(first_bad_n) + " = " +
                             std::to_string(value)),
          first_bad_n_(first_bad_n) {}

    [[nodiscard]] std::size_t first_bad_n() const noexcept { return first_bad_n_; }

private:
    std::size_t first_bad_n_;
};

} // namespace fbmlab
