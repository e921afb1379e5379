#pragma once

#include <stdexcept>
#include <string>

namespace pwa {

// Runtime numerical failures. Callers that map errors to process exit codes
// treat these as "computation failed" (exit 2), as opposed to
// std::domain_error which means "inputs invalid" (exit 1).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Trajectory blow-up: a coordinate left the guard envelope.
class DivergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Not enough data to produce a well-defined answer.
class InsufficientDataError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Two values are indistinguishable where a strict order is required.
class TieError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// File could not be opened, read, or written. Message carries the path.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace pwa
