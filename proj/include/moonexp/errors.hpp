#pragma once

#include <stdexcept>
#include <string>

namespace moonexp {

// Raised when a computation would need coefficients beyond a series' known
// precision, or when a valuation fails to stabilise under window doubling.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated (non-prime level, singular
// curve, non-invertible series, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two independent routes to the same quantity disagreed. These are bugs or
// broken assumptions, never user errors.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace moonexp
