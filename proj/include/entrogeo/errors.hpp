#pragma once

#include <stdexcept>
#include <string>

namespace entrogeo {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the admissible domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A probability of the path is (numerically) zero, so the score function is undefined.
class DegenerateDistribution : public DomainError {
 public:
  using DomainError::DomainError;
};

// Affine parameter outside the interval on which a geodesic is defined.
class OutOfValidity : public DomainError {
 public:
  using DomainError::DomainError;
};

// Fisher metric collapsed to (numerically) zero.
class MetricDegenerate : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bracket given to a root finder does not enclose a sign change.
class NoSignChange : public DomainError {
 public:
  using DomainError::DomainError;
};

// Errors below signal numerical breakdown rather than bad input.
class NumericalFailure : public Error {
 public:
  using Error::Error;
};

class StepFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

class QuadratureFailure : public NumericalFailure {
 public:
  using NumericalFailure::NumericalFailure;
};

}  // namespace entrogeo
