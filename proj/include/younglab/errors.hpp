#pragma once

#include <stdexcept>
#include <string>

namespace younglab {

/// Root of the library's error hierarchy. Every failure the library can
/// detect is thrown as a subclass of this, so callers (and the C API shim)
/// can map exceptions to a small set of conditions.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A constructor or operation precondition was violated; the message names
/// the violated invariant.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Kernel requested at an angle where the response matrix is not invertible
/// (|cos 2theta| or |sin 2theta| below the guard threshold).
class SingularKernel : public Error {
public:
  using Error::Error;
};

/// Matrix fails the positive-semidefinite test required by the operation.
class NotPositiveSemidefinite : public Error {
public:
  using Error::Error;
};

/// Degree of coherence is undefined because a diagonal intensity vanishes.
class UndefinedCoherence : public Error {
public:
  using Error::Error;
};

/// A distribution with negative cells was passed where a physically
/// observed (nonnegative) distribution is required.
class NegativeDistribution : public Error {
public:
  using Error::Error;
};

/// Operands have incompatible dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// File could not be read, written, or parsed.
class IoError : public Error {
public:
  using Error::Error;
};

} // namespace younglab
