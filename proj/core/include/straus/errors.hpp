#pragma once

#include <stdexcept>
#include <string>

namespace straus {

/// Input outside an operation's domain (non-prime p, x outside its range, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// lo > hi for a range query.
class EmptyRangeError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// An intermediate product does not fit the checked integer width.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Request exceeds a configured resource cap (oracle input size).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A triple handed to the recovery code is not a solution of 4/p = 1/x + 1/y + 1/z
/// of the requested type.
class InvalidSolutionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A supposedly exact construction came out inexact or unordered. Means the
/// witness handed in was broken.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A solution whose recovered divisor fails one of the necessary conditions.
/// Seeing this would be a counterexample to the characterization.
class CorrespondenceViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace straus
