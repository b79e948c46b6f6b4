#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace binres {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad or inconsistent caller input (maps to CLI exit code 1).
class ValidationError : public Error {
public:
    using Error::Error;
};

/// Operands live in rings with different variable counts.
class DimensionMismatchError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class MissingParameterError : public ValidationError {
public:
    explicit MissingParameterError(const std::string& param)
        : ValidationError("no value assigned to parameter " + param), param_(param) {}
    const std::string& parameter() const noexcept { return param_; }

private:
    std::string param_;
};

class DependentFormsError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class RetryBudgetError : public Error {
public:
    using Error::Error;
};

/// A matrix violates the shape contract of the determinant engine.
class MatrixShapeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DegenerateSystemError : public Error {
public:
    using Error::Error;
};

class SingularMatrixError : public Error {
public:
    SingularMatrixError(const std::string& what, unsigned degree)
        : Error(what), degree_(degree) {}
    unsigned degree() const noexcept { return degree_; }

private:
    unsigned degree_;
};

class DegreeRangeError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Random sample hit a degenerate configuration; caller should resample.
class DegenerateSampleError : public Error {
public:
    using Error::Error;
};

/// Syntax error in user input, with a 1-based source position.
class ParseError : public ValidationError {
public:
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : ValidationError(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An internal consistency check failed (maps to CLI exit code 2).
class InternalCheckError : public Error {
public:
    using Error::Error;
};

}  // namespace binres
