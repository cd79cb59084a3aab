#ifndef HYPWAVE_ERRORS_HPP
#define HYPWAVE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hypwave {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (zero base with non-positive
/// exponent, |z| outside the series regime, invalid physical constants, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series denominator parameter is zero or a negative integer.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Series did not meet its truncation criterion within max_terms.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A power base lies too close to the principal-branch cut for a stencil.
class BranchGuard : public Error {
 public:
  using Error::Error;
};

/// Every point of a residual grid was skipped.
class EmptyGrid : public Error {
 public:
  using Error::Error;
};

/// Malformed command line or scenario configuration (unknown key, bad
/// grid syntax, unknown equation or field name).
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypwave

#endif  // HYPWAVE_ERRORS_HPP
