#pragma once

#include <stdexcept>
#include <string>

namespace spinpa {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad index arity, out-of-range spin, object invariant violated.
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Two operands live in different spaces P_(k,e).
class ColorMismatch : public Error {
public:
  using Error::Error;
};

/// A factorization failed or produced non-finite values.
class NumericalError : public Error {
public:
  using Error::Error;
};

/// The requested computation exceeds the configured size cap.
class ResourceError : public Error {
public:
  using Error::Error;
};

} // namespace spinpa
