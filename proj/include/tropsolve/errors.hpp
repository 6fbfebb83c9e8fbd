#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tropsolve {

/// Operand shapes do not conform (matrix/vector sizes, inner dimensions).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was applied outside its mathematical domain, e.g. a classical
/// subtraction involving -inf.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A column has no finite entry and cannot be normalized.
class DegenerateColumnError : public DomainError {
 public:
  explicit DegenerateColumnError(std::size_t column)
      : DomainError("degenerate column " + std::to_string(column + 1) +
                    ": every entry is -inf"),
        column_(column) {}

  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. Line and column are 1-based; zero means "unknown".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(format(what, line, column)),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line,
                            std::size_t column) {
    if (line == 0) return what;
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

}  // namespace tropsolve
