#pragma once

#include <stdexcept>
#include <string>

namespace eap {

enum class ErrorCode {
  TooFewVertices,
  NonFinite,
  NotConvex,
  NotEqualArea,
  DegenerateScale,
  DegenerateMap,
  DegenerateAsymptotes,
  DegenerateHyperbola,
  NonConvexIntermediate,
  FrameDegenerate,
  OutOfRegime,
  NotNormalized,
  NotParallel,
  NonConvexSample,
  IntersectionNotFound,
  InvalidArgument,
  InternalInvariantViolation,
  EmptyScene,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::NotEqualArea: return "NotEqualArea";
    case ErrorCode::DegenerateScale: return "DegenerateScale";
    case ErrorCode::DegenerateMap: return "DegenerateMap";
    case ErrorCode::DegenerateAsymptotes: return "DegenerateAsymptotes";
    case ErrorCode::DegenerateHyperbola: return "DegenerateHyperbola";
    case ErrorCode::NonConvexIntermediate: return "NonConvexIntermediate";
    case ErrorCode::FrameDegenerate: return "FrameDegenerate";
    case ErrorCode::OutOfRegime: return "OutOfRegime";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NonConvexSample: return "NonConvexSample";
    case ErrorCode::IntersectionNotFound: return "IntersectionNotFound";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorCode::EmptyScene: return "EmptyScene";
  }
  return "UnknownError";
}

/// Library-wide exception type. The code tells callers what went wrong in a
/// machine-checkable way; the message carries context for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace eap
