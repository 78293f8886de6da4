#pragma once

#include <stdexcept>
#include <string>

namespace siwkb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point outside the open domain of the potential.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Parameter set violates a family constraint.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Level index at or beyond the last bound state.
class OutOfSpectrumError : public Error {
 public:
  using Error::Error;
};

class NoBoundRegionError : public Error {
 public:
  using Error::Error;
};

class AmbiguousRegionError : public Error {
 public:
  using Error::Error;
};

/// Iterative procedure (quadrature doubling, bisection) hit its cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Quantization target not reachable below the continuum / ceiling.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// The half-step shifted parameter a - hbar/2 leaves the structural range.
class ShiftedParameterError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

class TruncationError : public Error {
 public:
  using Error::Error;
};

}  // namespace siwkb
