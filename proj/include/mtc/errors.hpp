#pragma once

#include <stdexcept>
#include <string>

namespace mtc {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract input (bad index, wrong shape, float data
/// handed to an exact check). The CLI maps these to exit code 2.
struct InputError : Error {
  using Error::Error;
};

/// Unreadable mtc-data text. `where` carries a JSON path or byte offset.
struct ParseError : InputError {
  ParseError(const std::string& what, std::string where)
      : InputError(what + " (at " + where + ")"), message(what), location(std::move(where)) {}
  std::string message;
  std::string location;
};

/// Division by zero, field-order cap exceeded, mixed exact/float operands.
struct ArithmeticError : Error {
  using Error::Error;
};

/// The data is well formed but is not modular data (Verlinde gives a
/// non-integer, S is not unitary, ...).
struct NotModularError : Error {
  using Error::Error;
};

/// The data is modular but not of the graded/fermionic shape an operation
/// needs (grading closure broken, representative-dependent super S, ...).
struct StructuralError : Error {
  using Error::Error;
};

}  // namespace mtc
