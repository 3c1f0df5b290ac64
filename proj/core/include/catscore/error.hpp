#pragma once

#include <stdexcept>
#include <string>

namespace catscore {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arguments or data violate a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A file could not be parsed or failed schema validation.
class DataError : public Error {
 public:
  using Error::Error;
};

/// A matrix is singular, not positive-definite, or rank deficient.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace catscore
