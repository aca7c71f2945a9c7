#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace itmon {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: product index out of range, dimension mismatch, invalid object data.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A category or collection could not be built because a structural hypothesis fails.
class StructureError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when a result breaks an invariant the library guarantees. Indicates a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace itmon
