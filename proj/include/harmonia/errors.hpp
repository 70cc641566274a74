#pragma once

#include <stdexcept>
#include <string>

namespace harmonia {

// Invalid caller input (zero fixed point, odd k where even is required, ...)
// is reported with std::invalid_argument; division by zero with
// std::domain_error. The types below cover the remaining failure classes.

/// A requested construction is not representable in the working field,
/// e.g. a root of unity that the conductor does not contain.
struct ConfigurationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A construction finished but its result contradicts what was asked for
/// (group order mismatch, non-rational invariant, ...).
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A cost guard tripped: closure too large, oracle degree above its bound.
struct LimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace harmonia
