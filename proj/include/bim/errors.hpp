#pragma once

#include <stdexcept>
#include <string>

namespace bim {

// Instance/game file is malformed or violates model invariants.
struct LoadError : std::runtime_error {
  explicit LoadError(const std::string& msg) : std::runtime_error(msg) {}
};

// Scenario support product exceeds the enumeration limit.
struct SupportTooLarge : std::runtime_error {
  explicit SupportTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

// Exhaustive search space exceeds the configured cap.
struct SearchSpaceTooLarge : std::runtime_error {
  explicit SearchSpaceTooLarge(const std::string& msg)
      : std::runtime_error(msg) {}
};

}  // namespace bim
