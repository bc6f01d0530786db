#pragma once

#include <stdexcept>
#include <string>

namespace metatoeplitz {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands of incompatible dimension.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Malformed values, e.g. a non-symmetric block or a degenerate weight.
class InvalidInputError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The problem fails the admissibility conditions on (Phi0, q).
class InadmissibleError : public Error {
 public:
  using Error::Error;
};

/// The critical equations of a quadratic phase cannot be solved uniquely.
class DegeneratePhaseError : public Error {
 public:
  using Error::Error;
};

/// The heat-flow resolvent det(I - Q Sigma) vanishes.
class ResolventSingularError : public Error {
 public:
  using Error::Error;
};

/// The stationary-phase system for the Bergman form is singular.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// A quadrature integrand is not integrable against its Gaussian weight.
class QuadratureDivergenceError : public Error {
 public:
  using Error::Error;
};

/// The Gaussian convolution defining the numeric Weyl symbol diverges.
class NotAbsolutelyConvergentError : public Error {
 public:
  using Error::Error;
};

/// Independent sub-verdicts conflict outside the tolerance band.
///
/// This always signals an implementation defect and is never resolved
/// silently.
class DisagreementError : public Error {
 public:
  using Error::Error;
};

/// Problem or grid description could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace metatoeplitz
