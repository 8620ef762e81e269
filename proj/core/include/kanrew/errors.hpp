#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kanrew {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed interchange text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse error at line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed input that violates an invariant of the data model.
/// `location` is a JSON pointer into the document when known.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message,
                           std::string location = {})
      : Error(location.empty() ? message : location + ": " + message),
        message_(message),
        location_(std::move(location)) {}

  const std::string& message() const noexcept { return message_; }
  const std::string& location() const noexcept { return location_; }

  ValidationError at(const std::string& location) const {
    return ValidationError(message_, location);
  }

 private:
  std::string message_;
  std::string location_;
};

/// Two paths (or a term and a path) whose endpoints do not meet.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// Reduction ran past its step budget; only a mis-oriented rule can cause it.
class ReductionLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace kanrew
