#pragma once

#include <stdexcept>
#include <string>

namespace rampsi {

/// Raised when an argument violates an operation's precondition.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when x falls inside the removable-singularity band of a positive
/// integer and the requested formula keeps the singular terms separate.
class GuardBandError : public DomainError {
 public:
  GuardBandError(const std::string& what, long nearest_integer)
      : DomainError(what), nearest_integer_(nearest_integer) {}

  long nearest_integer() const noexcept { return nearest_integer_; }

 private:
  long nearest_integer_;
};

/// Raised when a requested accuracy cannot be reached within the term caps.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rampsi
