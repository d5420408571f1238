#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bordered {

/// Base of all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the domain of the operation.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Malformed input data; carries the 1-based line (or record) number.
class InvalidInput : public Error {
 public:
  InvalidInput(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// The requested work exceeds a configured budget.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Always a bug, never an input problem.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bordered
