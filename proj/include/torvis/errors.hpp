#pragma once

#include <stdexcept>
#include <string>

namespace torvis {

// Error taxonomy. The category decides the process exit code:
// input errors -> 1, internal invariant violations -> 2,
// post-hoc validation failures -> 3.
enum class ErrorCode {
  // input / precondition errors
  SyntaxError,
  DuplicateDart,
  MissingDart,
  LoopPresent,
  Disconnected,
  Condition2Violation,
  SignMismatch,
  NotCellular,
  NotPlanarAfterCut,
  NotTwoConnected,
  DegreeTooHigh,
  DanglingEdge,
  // internal invariant violations
  WrapFaceNotFound,
  PathNotSimple,
  FlowDeficit,
  NonCrossingViolation,
  FaceSourceSinkViolation,
  MergedCycle,
  BlockNotConsecutive,
  ExclusivityViolation,
  StubMismatch,
  AlignmentFailure,
};

const char* errorCodeName(ErrorCode c);

// True for codes that indicate a bug or broken internal state rather than
// bad user input.
bool isInternalError(ErrorCode c);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(errorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

inline void require(bool cond, ErrorCode code, const std::string& message) {
  if (!cond) fail(code, message);
}

}  // namespace torvis
