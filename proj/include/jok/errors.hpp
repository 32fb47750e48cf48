// Error types shared by all jok modules.
#pragma once

#include <stdexcept>
#include <string>

namespace jok {

// Violated precondition: invalid parameter, algebra mismatch, non-idempotent
// argument, invalid signature, degenerate input. Maps to CLI exit code 2.
class precondition_error : public std::invalid_argument {
 public:
  explicit precondition_error(const std::string& what)
      : std::invalid_argument(what) {}
};

// A numeric routine failed to meet its accuracy contract (root residual,
// non-integer projector trace, reconstruction failure). Never silent.
// Maps to CLI exit code 3.
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace jok
