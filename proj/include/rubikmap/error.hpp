#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rubikmap {

enum class ErrorCode {
  NotTrivalent,
  NotInvolution,
  Disconnected,
  MalformedInput,
  ParameterOutOfRange,
  IoError,
  DomainMismatch,
  NotAMember,
  IllDefinedProjection,
  CapExceeded,
  FaceNotInMap,
  DegenerateFace,
  DifferentVertices,
  NotOrientationPreserving,
  OutOfConjectureScope,
  BudgetExceeded,
  UnknownSession,
  UnknownFace,
  MalformedRequest,
  UnknownMap,
};

/// Stable identifier used in reports and service responses, e.g. "NotTrivalent".
std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

} // namespace rubikmap
