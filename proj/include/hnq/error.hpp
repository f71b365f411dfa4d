#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hnq {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Division by zero and similar exact-arithmetic faults.
class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Malformed or mismatched arguments.
class InputError : public Error {
 public:
  using Error::Error;
};

// The operation is well defined but not implemented for this input class
// (cyclic quivers, rational fields in finite enumeration, ...).
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured bound.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

// Data that cannot come from a valid input (non-integral multiplicities,
// dimension vectors that do not decompose, ...).
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

// A recovery algorithm was asked to run with a charge it cannot use.
class RefusalError : public Error {
 public:
  using Error::Error;
};

// A result contradicts a theorem the code relies on; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace hnq
