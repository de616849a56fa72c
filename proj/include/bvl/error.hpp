#pragma once

#include <stdexcept>
#include <string>

namespace bvl {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegreeMismatch : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

/// A request exceeded a configured feasibility cap (group order, k, ...).
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// A precondition on the input objects does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A constructed object failed its own verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

/// Not enough mutually inequivalent generating triples were available.
class PoolExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace bvl
