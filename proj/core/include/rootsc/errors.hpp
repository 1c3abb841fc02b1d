#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rootsc {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (degree mismatch, bad k/l, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed DFA text. `line()` is one-based; 0 means "end of input".
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap (monoid element cap, search budget) was hit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rootsc
