#pragma once

#include <stdexcept>
#include <string>

namespace qxr {

// Rejected user input: invalid catalog parameters, profile preconditions,
// malformed configuration. The message names the violated constraint.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A point outside the regular domain of a construction.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Numerical breakdown: profile blow-up, ill-conditioned metric.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qxr
