#pragma once

#include <stdexcept>
#include <string>

namespace qbaker {

// Invalid request or experiment parameters. CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Request exceeds a documented resource cap (dense matrices, state vectors).
// CLI maps this to exit code 3.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal cross-check between two independent computations failed.
// This always indicates a library bug, never bad user input.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace qbaker
