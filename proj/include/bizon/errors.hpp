#pragma once

#include <stdexcept>
#include <string>

namespace bizon {

/// Raised when an input violates an operation's precondition
/// (bad edge index, vertex out of range, malformed ordering, ...).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a computation would exceed its enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised when r < -delta_G.
class RBelowMinimum : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

} // namespace bizon
