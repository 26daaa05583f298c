#pragma once

#include <stdexcept>
#include <string>

namespace nswave {

// Invalid configuration or inputs that violate a documented precondition.
// The CLI maps this to exit code 1.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A run aborted mid-flight (positivity loss, non-finite value).
// The CLI maps this to exit code 2.
class RuntimeAbort : public std::runtime_error {
 public:
  explicit RuntimeAbort(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace nswave
