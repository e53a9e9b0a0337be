#pragma once

#include <stdexcept>
#include <string>

namespace anneal {

// Base for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A numeric precondition on an input value does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// One of the technical assumptions ln n >= 1, ln ln A >= 1, A >= ln n is
// violated. The message names the failing assumption.
class AssumptionViolation : public Error {
 public:
  using Error::Error;
};

// Schedule is not strictly increasing from 0 to infinity.
class MalformedSchedule : public Error {
 public:
  using Error::Error;
};

// Exhaustive enumeration would exceed the configured state cap.
class EnumerationTooLarge : public Error {
 public:
  using Error::Error;
};

// Instance or schedule document could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

// pl_approx saw a midpoint residual that is not monotone.
class NonConvexCurve : public Error {
 public:
  using Error::Error;
};

}  // namespace anneal
