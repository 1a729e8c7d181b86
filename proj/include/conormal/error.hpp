#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conormal {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  explicit DivisionByZero(const std::string& what = "inverse of zero in a prime field") : Error(what) {}
};

class RingMismatch : public Error {
 public:
  RingMismatch() : Error("operands live in different rings") {}
};

class NotZeroDimensional : public Error {
 public:
  NotZeroDimensional() : Error("ideal is not zero-dimensional") {}
};

/// Raised when a Groebner computation exceeds its reduction-step budget.
class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(unsigned long long steps)
      : Error("reduction budget exceeded after " + std::to_string(steps) + " steps"),
        steps_(steps) {}
  unsigned long long steps() const noexcept { return steps_; }

 private:
  unsigned long long steps_;
};

/// Parse failure with a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace conormal
