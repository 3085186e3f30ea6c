#pragma once

#include <stdexcept>

namespace confined_atom {

// The configuration admits no normalizable bound state (2 Z a <= 1).
class NoBoundState : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A numerical procedure could not deliver its result: empty bracket,
// non-convergence, singular matching system.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the region where an evaluator is accurate or finite.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace confined_atom
