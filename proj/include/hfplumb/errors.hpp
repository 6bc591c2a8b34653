#pragma once

#include <stdexcept>
#include <string>

namespace hfplumb {

// Input that cannot be parsed or violates a precondition. Maps to CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Graph (or triangle spec) is outside the scope the algorithm is valid for.
// Maps to CLI exit code 2.
class NotApplicableError : public std::runtime_error {
 public:
  explicit NotApplicableError(const std::string& msg) : std::runtime_error(msg) {}
};

// A configurable resource cap was hit. Maps to CLI exit code 3.
class CapExceededError : public std::runtime_error {
 public:
  explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularFormError : public std::runtime_error {
 public:
  explicit SingularFormError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hfplumb
