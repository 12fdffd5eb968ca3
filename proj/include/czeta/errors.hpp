#pragma once

#include <stdexcept>
#include <string>

namespace czeta {

/// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's mathematical domain or contract box.
class DomainError : public Error {
 public:
  using Error::Error;
};

class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// zeta(s) requested inside the guard disk around s = 1.
class PoleAtOne : public PoleError {
 public:
  PoleAtOne() : PoleError("pole at s=1; evaluate E instead") {}
};

class ContractViolation : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Both multiplier forms are singular at the requested point.
class RemovableSingularity : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A 0 * infinity product whose limit this library does not evaluate.
class IndeterminatePoint : public DomainError {
 public:
  using DomainError::DomainError;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

/// Numerical failures: the inputs were valid but the method could not deliver.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

class NonFiniteIntegrand : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

class TruncationFailure : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

}  // namespace czeta
