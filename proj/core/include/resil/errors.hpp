#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace resil {

/// Malformed DIMACS input. `line()` is 1-based, 0 when the error is not tied to a line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A caller broke an operation's precondition (existing edge added, improper coloring decoded, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed its configured size budget.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The instance is outside the domain of the query (e.g. resilience of an uncolorable graph).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace resil
