#ifndef ESCAT_ERRORS_HPP
#define ESCAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace escat {

/// Dimension or unit mismatch in a quantity computation.
class UnitError : public std::runtime_error {
public:
    explicit UnitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid input: broken invariants, malformed configs, bad arguments.
/// Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical domain failure: forward beam, already-decohered tau,
/// degenerate normalization, positivity violation, quadrature accuracy.
/// Maps to CLI exit code 3.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace escat

#endif
