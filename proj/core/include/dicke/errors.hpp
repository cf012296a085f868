#pragma once

#include <stdexcept>
#include <string>

namespace dicke {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &msg) : std::runtime_error(msg) {}
};

/// A basis digit is not in [0, d-1].
class DigitOutOfRange : public Error {
  public:
    using Error::Error;
};

/// Two states (or a state and a gate/circuit) disagree on d or n.
class DimensionMismatch : public Error {
  public:
    using Error::Error;
};

/// d^n would exceed the supported amplitude count.
class CapacityExceeded : public Error {
  public:
    using Error::Error;
};

/// A subspace level is not in [0, d-1].
class LevelOutOfRange : public Error {
  public:
    using Error::Error;
};

/// Subspace levels must satisfy i < j.
class LevelsNotOrdered : public Error {
  public:
    using Error::Error;
};

/// A wire position is not in [0, n-1].
class PositionOutOfRange : public Error {
  public:
    using Error::Error;
};

/// A control wire coincides with the target wire.
class ControlOnTarget : public Error {
  public:
    using Error::Error;
};

/// binomial(a, b) requires a >= 0.
class NegativeUpperIndex : public Error {
  public:
    using Error::Error;
};

/// Occupation counts do not sum to the number of sites.
class SumMismatch : public Error {
  public:
    using Error::Error;
};

/// Invalid (s2, n, k) or (s2, m, k') combination.
class InvalidSpec : public Error {
  public:
    using Error::Error;
};

/// The occupation vector does not solve the constraints for this spec.
class NotASolution : public Error {
  public:
    using Error::Error;
};

/// Partition size l must satisfy 1 <= l < n.
class PartitionOutOfRange : public Error {
  public:
    using Error::Error;
};

/// sigma^2 = 0: the Gaussian entropy approximation is undefined.
class DegenerateVariance : public Error {
  public:
    using Error::Error;
};

/// Solved rotation angles fail to reproduce the recursion coefficients.
class InconsistentCoefficients : public Error {
  public:
    using Error::Error;
};

/// No circuit topology is defined for this (m, ell, i); indicates a bug.
class UnsupportedShape : public Error {
  public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
  public:
    using Error::Error;
};

} // namespace dicke
