#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tpolar {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A randomized computation hit a non-generic specialization: independent
/// trials disagreed, or a slice that must be finite was not. Rerun with a
/// different seed or prime.
class GenericityError : public Error {
 public:
  using Error::Error;
};

}  // namespace tpolar
