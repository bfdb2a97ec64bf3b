#pragma once

#include <stdexcept>
#include <string>

namespace mgpe {

/// Input violates a documented precondition (bad radius, non-positive mass, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Tridiagonal elimination hit a zero, subnormal or non-finite pivot.
class SingularSystemError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iteration failed to converge; derived types carry the partial result.
class ConvergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mgpe
