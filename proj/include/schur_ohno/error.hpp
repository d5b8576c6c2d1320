#pragma once

#include <stdexcept>
#include <string>

namespace schur_ohno {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition, shape, index text or argument value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Index outside the domain where the requested series converges.
class InadmissibleIndex : public Error {
 public:
  using Error::Error;
};

/// No dual tableau is known for the given shape.
class UnsupportedShape : public Error {
 public:
  using Error::Error;
};

/// Numerical integration did not reach the requested tolerance.
class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace schur_ohno
