#pragma once

#include <stdexcept>
#include <string>

namespace supertime {

/// Rejected input: non-positive physical parameter, bad tag, malformed sample set.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A closed-form approximation was asked to operate outside its validity gate
/// (dipole expansion, long-wavelength / non-relativistic motion).
class ApproximationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An integral that does not converge (e.g. a window with a sharp edge).
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure inside the grid oracle (norm drift, wraparound).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    throw InvalidInput(std::string(name) + " must be positive, got " + std::to_string(value));
  }
}

inline void require_non_negative(double value, const char* name) {
  if (!(value >= 0.0)) {
    throw InvalidInput(std::string(name) + " must be non-negative, got " + std::to_string(value));
  }
}

}  // namespace detail
}  // namespace supertime
