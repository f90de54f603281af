#pragma once

#include <stdexcept>
#include <string>

namespace majorana {

// Base for every error raised by the library. The CLI maps subclasses onto
// its exit-code contract.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-contract input (bad lengths, zero vectors, bad counts).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class LabelMismatch : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class RangeError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// Numerical failures.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class NonConvergence : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateConstellation : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class StepUnderflow : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace majorana
