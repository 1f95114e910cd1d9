#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cmreg {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a 0-based offset into the string
// that was being parsed; for multi-line documents `line` is 1-based.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t position, std::size_t line = 0)
      : Error(what), position(position), line(line) {}
  std::size_t position;
  std::size_t line;
};

// Operands were built over different ring contexts.
struct ContextMismatchError : Error {
  using Error::Error;
};

// A broken internal invariant: this is a bug in the library, not a user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace cmreg
