#pragma once

#include <stdexcept>
#include <string>

namespace qtr {

// Rejected input. `field()` names the offending parameter (matches the CLI flag
// name without dashes) so front ends can report it.
class ValidationError : public std::invalid_argument {
 public:
  ValidationError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Internal numerical failure (singular system, non-finite objective, ...).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qtr
