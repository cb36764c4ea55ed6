#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torus {

enum class ErrorKind {
  DivisionByZero,
  SIsSquare,
  NotAUnit,
  NotInvertible,
  ZeroMatrix,
  SyntaxError,
  NonPositiveExponent,
  DeltaDivisible,
  EmptyWord,
  NotCoprime,
  BadParameters,
  ZeroDenominator,
  UnsupportedKind,
  ParameterMismatch,
  PatternInvalid,
  DeltaResidue,
  NonTermination,
  ShapeMismatch,
  ReflectionCheckFailed,
  CapExceeded,
};

std::string_view error_name(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` names the failure class;
/// the CLI maps it onto an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

/// Word-grammar failure; `offset()` is the byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, std::size_t offset, const std::string& what)
      : Error(kind, what + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace torus
