#pragma once

#include <stdexcept>
#include <string>

namespace spinor {

// Bad argument values: out-of-range ranks, indices, non-prime moduli.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input lies outside the region where a formula is asserted.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Geometric precondition failed (e.g. a subspace is not in the open set U).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The flag or point configuration is degenerate for the requested construction.
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exhaustive computation would exceed the configured size cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spinor
