#pragma once

#include <stdexcept>
#include <string>

namespace liemod {

enum class ErrorCode {
  DenominatorVanishes,
  MissingParameter,
  ParametricEntry,
  NoValidSample,
  DimensionMismatch,
  SingularMatrix,
  DivisionByZero,
  JacobiFails,
  OutOfRange,
  UnknownId,
  SyntaxError,
  DuplicateTerm,
  IndexOutOfRange,
  RangeViolation,
  ConditionFailed,
  UndefinedAtPoint,
  OrderTooSmall,
  InvalidArgument,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

/// Parse failure with a 1-based source position (line 0 = not line-oriented).
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& what, int line, int column)
      : Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", column " +
                                          std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace liemod
