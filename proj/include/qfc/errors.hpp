#pragma once

#include <stdexcept>

namespace qfc {

/// Malformed or inconsistent scenario input (unknown keys, bad types,
/// missing fields, out-of-range values found at parse time).
struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Filesystem trouble: unreadable inputs, unwritable output paths.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qfc
