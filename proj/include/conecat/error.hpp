#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace conecat {

enum class ErrorCode {
  DegenerateTriangle,
  PerimeterTooLarge,
  EdgeLengthMismatch,
  UnmatchedEdge,
  NonManifoldGluing,
  NotApplicable,
  NotSpherical,
  InconsistentRegion,
  DuplicateLines,
  NotAdmissible,
  NotNamedArrangement,
  InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported through this type;
/// `code()` names the failure class so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace conecat
