#pragma once

#include <stdexcept>
#include <string>

namespace tc {

// Which structural requirement a ring (or its input data) violated.
enum class ValidationKind {
  Commutativity,
  DegreeMismatch,
  Associativity,
  Unit,
  OddSquare,
  Input,
};

std::string to_string(ValidationKind k);

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad scalar arithmetic: mixed coefficient rings, non-invertible element, ...
class ScalarError : public Error {
 public:
  using Error::Error;
};

// A multiplication table (or other ring datum) failed validation.
class RingError : public Error {
 public:
  RingError(ValidationKind kind, const std::string& msg)
      : Error(to_string(kind) + ": " + msg), kind_(kind) {}
  ValidationKind kind() const { return kind_; }

 private:
  ValidationKind kind_;
};

// Preconditions of a computation were not met (wrong ring supplied, etc).
class ComputeError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& msg)
      : Error("line " + std::to_string(line) + ": " + msg), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace tc
