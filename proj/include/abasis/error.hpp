#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace abasis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed set expression; `position()` is the byte offset of the offending token.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

private:
  std::size_t position_;
};

/// An operation that needs an additive basis received something else.
class NotABasis : public Error {
public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
public:
  using Error::Error;
};

/// A configured size limit (modulus cap, sieve capacity, oracle cap) was exceeded.
class CapacityError : public Error {
public:
  using Error::Error;
};

}  // namespace abasis
