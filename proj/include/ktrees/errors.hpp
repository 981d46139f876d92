#pragma once

#include <stdexcept>
#include <string>

namespace ktrees {

// Raised when a result that must be exact (a structure count, an exact
// division) comes out wrong. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

// Raised when a request exceeds the configured size of a bounded engine.
class BoundsExceeded : public std::out_of_range {
 public:
  explicit BoundsExceeded(const std::string& what) : std::out_of_range(what) {}
};

}  // namespace ktrees
