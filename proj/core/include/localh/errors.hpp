#pragma once

#include <stdexcept>
#include <string>

namespace localh {

// Thrown when a request is well-formed but would exceed an enumeration or
// sweep budget (rank cap, n! or Bell-number limits).
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal identity that must hold by construction did not.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace localh
