#pragma once

#include <stdexcept>
#include <string>

namespace equisym {

// Bad input data: malformed tables, strings, shape mismatches.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The request is well-formed but outside the configured limits
// (group too large for brute force, orbit search too big, ...).
class CapabilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw ValidationError(msg); }

}  // namespace equisym
