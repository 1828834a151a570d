#pragma once

#include <stdexcept>

namespace gqc {

// Input is structurally wrong for the requested operation, e.g. a covariance
// matrix whose cross correlations are not a (c, -c) pair where one is required.
class FormError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric input outside the operation's domain: negative occupation numbers,
// non-finite gains, entropy arguments below the branch point.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The state carries no cross correlation, so a correlation-derived quantity
// (symmetric gain, teleportation resource) does not exist.
class ProductStateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Internally inconsistent numbers: discriminants negative beyond tolerance,
// a bisection criterion that is not monotone, and similar.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gqc
