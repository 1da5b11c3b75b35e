#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace avoidance {

/// Raised when an input violates a geometric precondition (zero vectors,
/// dependent forms, hyperplanes not in general position, ...).
class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the witness constructors when no curve of the supported shape
/// satisfies the avoidance conditions.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace avoidance
