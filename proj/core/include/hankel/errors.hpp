#pragma once

#include <stdexcept>
#include <string>

namespace hankel {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic on series with different truncation orders.
class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

/// Reciprocal of a series with vanishing constant term, or division by a
/// non-constant polynomial.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// Composition with an inner series whose constant term is nonzero.
class CompositionDomainError : public Error {
 public:
  using Error::Error;
};

/// The order-by-order linear solve for a coefficient degenerated.
class DerivationError : public Error {
 public:
  using Error::Error;
};

/// A hard-coded decomposition failed to expand to the reference polynomial.
class SymbolicInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Root isolation or another numeric subroutine failed to converge.
class NumericFailureError : public Error {
 public:
  using Error::Error;
};

/// A certified bound chain hit a failing step; the message names the step.
class PipelineError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied argument violates a precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace hankel
