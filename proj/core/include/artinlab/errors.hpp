#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinlab {

/// Malformed caller input: unknown generator, subset outside the graph, ...
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oracle mode was requested on a graph it does not apply to.
class ModeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The fundamental domain needs at least two components of the 2-labeled subgraph.
class DegenerateDomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Graph document could not be read. Line and column are 1-based; 0 means unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : std::runtime_error(format(message, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, std::size_t line, std::size_t column) {
    if (line == 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace artinlab
