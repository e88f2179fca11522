#pragma once

#include <stdexcept>

namespace ivp {

// Raised when a computation is refused because it exceeds a configured
// feasibility bound (simple-permutation enumeration, realizer output cap,
// census size). Never an approximation: over the bound means no answer.
class FeasibilityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ivp
