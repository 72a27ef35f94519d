#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hompre {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class SingularMap : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

/// Raised when an operation's precondition on its inputs does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

class InvalidInput : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class TwistMismatch : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class Pro1Violation : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class NotAnSMatrix : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class AsymmetricInput : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class IntertwinerViolation : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class BudgetExceeded : public PreconditionError {
public:
  using PreconditionError::PreconditionError;
};

class UnsupportedKind : public Error {
public:
  using Error::Error;
};

class UnknownSlug : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& message, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? message
                        : message + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hompre
