// errors.hpp — exception taxonomy shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace iondecay {

// Root of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid argument domain (x <= 0 for K1, nonpositive distances, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Amplitude at the top Fock level too large for a sideband map to act faithfully.
class TruncationLeakage : public Error {
 public:
  using Error::Error;
};

// Moment hierarchy asked to start from a Fock state the truncation cannot hold.
class TruncationTooSmall : public Error {
 public:
  using Error::Error;
};

// Adaptive integrator forced below its minimum step size.
class StepSizeUnderflow : public Error {
 public:
  using Error::Error;
};

// Density-matrix population reached the top of the Fock basis during a run.
class TailLeakage : public Error {
 public:
  using Error::Error;
};

// Gaussian phase-space dispersion too small to evaluate pointwise; use moments.
class DegenerateDispersion : public Error {
 public:
  using Error::Error;
};

// Numeric postcondition violated (trace drift, negative eigenvalue, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Missing or malformed configuration key.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace iondecay
