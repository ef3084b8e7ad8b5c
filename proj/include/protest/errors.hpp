#pragma once

#include <stdexcept>
#include <string>

namespace protest {

/// Bad input: a parameter, state, axis or document that violates its
/// constraints. Maps to CLI exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed scenario document. Carries the 1-based line/column when known.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : ValidationError(what), line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// A run could not be completed. Maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The discrete step removed more than the available population.
class StepSizeError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// The integrator produced a non-finite state.
class DivergenceError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace protest
