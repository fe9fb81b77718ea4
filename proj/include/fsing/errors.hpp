#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fsing {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ArityMismatch : public Error {
 public:
  using Error::Error;
};

class DomainMismatch : public Error {
 public:
  using Error::Error;
};

// Raised when a prime divides a denominator, a discriminant or a leading
// coefficient of the data being reduced.
class BadPrime : public Error {
 public:
  BadPrime(unsigned long long p, const std::string& why)
      : Error("bad prime " + std::to_string(p) + ": " + why), prime(p) {}
  unsigned long long prime;
};

class ResourceExceeded : public Error {
 public:
  using Error::Error;
};

class NotStabilized : public Error {
 public:
  using Error::Error;
};

class InputNotInMaximalIdeal : public Error {
 public:
  using Error::Error;
};

class ArityTooLarge : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed.  Never a mathematical finding.
class InvariantBreach : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

}  // namespace fsing
