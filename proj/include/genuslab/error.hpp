#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace genuslab {

// Base class for every error raised by the library. Callers that only care
// about "bad input vs. everything else" can catch this one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data violates a documented invariant. `field` names the offending
// location (e.g. "chi[1]" or "E.hodge"), empty when not applicable.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& message)
      : Error(field.empty() ? message : field + ": " + message), field_(std::move(field)), message_(message) {}

  const std::string& field() const noexcept { return field_; }
  // The message without the field prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  std::string field_;
  std::string message_;
};

}  // namespace genuslab
