#pragma once

#include <stdexcept>
#include <string>

namespace tperf {

// Malformed or out-of-contract user input (bad files, non-claw-free graphs).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A caller broke an operation's documented precondition.
class PreconditionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An internal structural assertion failed. Never turned into a verdict.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An exponential routine was asked to run above its configured size guard.
class SizeGuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionViolation(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InvariantViolation(what);
}

}  // namespace detail
}  // namespace tperf
