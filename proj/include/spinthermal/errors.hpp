#pragma once

#include <stdexcept>
#include <string>

namespace spinthermal {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Failures of the numeric kernels (exit code 3 in the CLI).
class NumericError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public NumericError {
 public:
  using NumericError::NumericError;
};

class NoConvergence : public NumericError {
 public:
  using NumericError::NumericError;
};

class NotPSD : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Invalid arguments to physics-level operations.
class DomainError : public Error {
 public:
  using Error::Error;
};

class InvalidTemperature : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedModel : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoRoot : public DomainError {
 public:
  using DomainError::DomainError;
};

class OutOfDomain : public DomainError {
 public:
  using DomainError::DomainError;
};

class InvalidGrid : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace spinthermal
