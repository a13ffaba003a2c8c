#pragma once

#include <stdexcept>
#include <string>

namespace toricreg {

/// Malformed input or a violated precondition (maps to CLI exit code 1).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A computation hit a user-configurable cap before finishing (exit code 2).
class Inconclusive : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed; indicates a bug (exit code 3).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// 64-bit coordinate range would be exceeded.
class OverflowError : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

}  // namespace toricreg
