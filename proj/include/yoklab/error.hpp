#pragma once

#include <stdexcept>
#include <string>

namespace yoklab {

// Bad input: malformed scalars, out-of-range indices, mismatched sizes,
// unsupported field parameters. The CLI maps these to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An internal computation reached a state that contradicts a structural
// assumption (e.g. a non-nilpotent ideal where nilpotency was expected).
class ComputationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yoklab
