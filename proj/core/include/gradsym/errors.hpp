#pragma once

#include <stdexcept>
#include <string>

namespace gradsym {

/// Exact arithmetic hit a mathematically undefined operation (e.g. x / 0).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point evaluation landed on a pole. Callers retry at another point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller violated an API precondition (bad index, chart mismatch, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A chart could not be built because a structural invariant fails.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// An internal consistency check failed; indicates a convention bug.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace gradsym
