#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace decpi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input uses a construct outside the supported circuit language
/// (e.g. a c2d OR-node that is not a decision).
class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

/// A query asked for something this library refuses to do: intractable side
/// of a query, or a brute-force search above its configured cap.
class Unsupported : public Error {
 public:
  using Error::Error;
};

class CapExceeded : public Unsupported {
 public:
  using Unsupported::Unsupported;
};

/// Evaluating against an assignment that does not cover the circuit.
class MissingVariable : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on the arguments does not hold.
class PromiseViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace decpi
