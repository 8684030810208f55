#pragma once

#include <stdexcept>
#include <string>

namespace dyndeg {

/// Base class for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ζ is an integer multiple of 1, i or 1±i, so some power of ζ is real.
class AdmissibilityError : public Error {
 public:
  using Error::Error;
};

/// The exponent matrix of a monomial map has zero determinant.
class DegenerateMatrix : public Error {
 public:
  using Error::Error;
};

/// An interval computation needed more precision than the configured cap.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Exact division or a gcd consistency check failed during reduction.
class ReductionFailure : public Error {
 public:
  using Error::Error;
};

/// A composition would exceed the degree or monomial budget.
class ResourceExhausted : public Error {
 public:
  using Error::Error;
};

/// Random-line degree trials disagreed with each other.
class OracleInconsistency : public Error {
 public:
  using Error::Error;
};

/// One of the involution identities did not hold.
class CheckFailed : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes produced disjoint enclosures.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace dyndeg
