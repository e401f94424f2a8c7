#pragma once

#include <stdexcept>
#include <string>

namespace cohgeom {

/// Caller passed arguments that violate an operation's preconditions
/// (dimension mismatch, zero vector, wrong degree, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A parameter lies outside the domain where the construction is defined,
/// e.g. |xi| >= 1 for the SU(1,1) states or a point off the unit ball.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested chart does not contain the point.
class ChartError : public DomainError {
 public:
  explicit ChartError(const std::string& what) : DomainError("point outside chart: " + what) {}
};

/// Exact integer arithmetic would overflow 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Non-finite function values, singular metrics, degenerate images.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace cohgeom
