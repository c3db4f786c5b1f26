#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace reo {

enum class ErrorKind {
  InvalidParameter,
  EdgeNotFound,
  Overflow,
  ParseError,
  TooLarge,
  TooLargeForExhaustive,
  IncompleteColoring,
  Indeterminate,
  NotAnUpperBoundWitness,
  ClaimViolated,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; `kind()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// EOG parse failure; `line()` is 1-based, 0 when the problem is not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace reo
