#pragma once

#include <stdexcept>
#include <string>

namespace uqd {

// Argument outside the mathematical domain of an operation (k > n, prior
// outside [0,1], c1 past the feasible arc, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Mismatched inputs, e.g. a state and an operator built for different n.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerically recovered structure disagrees with the expected one.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds the dense-storage caps.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace uqd
