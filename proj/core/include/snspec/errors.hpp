#pragma once

#include <stdexcept>
#include <string>

namespace snspec {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument value (negative length, incompatible units, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A lookup key does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// The request exceeds a deliberate capability guard (e.g. oracle cost limits).
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// Two inputs that must describe the same physical state disagree.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// A data file could not be read or parsed.
class DataFileError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to converge within its budget.
/// Carries the partial estimate accumulated before giving up.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double partial_value, double error_estimate)
      : Error(what), partial_value_(partial_value), error_estimate_(error_estimate) {}

  double partial_value() const { return partial_value_; }
  double error_estimate() const { return error_estimate_; }

 private:
  double partial_value_;
  double error_estimate_;
};

}  // namespace snspec
