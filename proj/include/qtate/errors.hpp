#pragma once

#include <stdexcept>
#include <string>

namespace qtate {

/// Base class for failures of a numerical procedure (as opposed to bad input).
/// The CLI maps these to exit code 1.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two successive quadrature resolutions disagree beyond the requested tolerance.
class ResolutionError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An extrapolation table did not settle within tolerance.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Sampling grids violate the reciprocity bound between log-side and spectral-side windows.
class AliasingError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

}  // namespace qtate
