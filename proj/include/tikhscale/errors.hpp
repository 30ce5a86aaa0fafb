#pragma once

#include <stdexcept>
#include <string>

namespace tikhscale {

// Numeric input violates a precondition (non-finite entry, length mismatch,
// exponent out of range).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A configuration value violates a structural constraint (k <= 1, c*||G|| >= 1, ...).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An iterative search exhausted its budget without meeting its stopping rule.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tikhscale
