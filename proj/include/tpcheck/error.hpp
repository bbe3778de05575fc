#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpcheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& msg)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// An operation was called outside its contract (e.g. UC extraction on a
/// satisfiable clause set).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The automaton/product exploration hit its configured node limit. Distinct
/// from any verdict: the question was not decided.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpcheck
