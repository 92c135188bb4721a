#pragma once

#include <stdexcept>
#include <string>

namespace egzkit {

/// A documented precondition of an operation was violated by the caller.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input outside an operation's domain (e.g. a modulus that is too small).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Square matrix with zero determinant handed to lattice_index.
class DegenerateBasisError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact 64-bit arithmetic would have wrapped.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// An enumeration would exceed its configured candidate ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A decomposition or factorisation that the underlying theorem guarantees
/// was not found. Never expected; raised loudly so it cannot pass silently.
class ContradictionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace egzkit
