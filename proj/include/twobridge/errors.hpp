#pragma once

#include <stdexcept>
#include <string>

namespace twobridge {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the operation's domain (bad Schubert form, r outside (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A continued fraction took a reciprocal of zero.
class EvaluationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical invariant that must hold for valid input was violated.
class InternalError : public Error {
 public:
  using Error::Error;
};

/// det(M - tM^T) could not be normalized to a symmetric polynomial with value 1 at t = 1.
class NormalizationError : public Error {
 public:
  using Error::Error;
};

/// Symmetrized Seifert matrix is singular.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// The meridian slope 1/0 was passed where a surgery slope is required.
class MeridianError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace twobridge
