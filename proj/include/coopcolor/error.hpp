#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coopcolor {

enum class ErrorCode {
  OutOfRangeVertex,
  SelfLoop,
  DuplicateEdge,
  LengthMismatch,
  IndexOutOfRange,
  CycleDetected,
  OddCycleDetected,
  InvalidRoots,
  InvalidBipartition,
  NotAForest,
  MissingBipartition,
  InfeasibleDegree,
  EmptyChoiceSet,
  InvalidArgument,
  ParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeVertex: return "OutOfRangeVertex";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::OddCycleDetected: return "OddCycleDetected";
    case ErrorCode::InvalidRoots: return "InvalidRoots";
    case ErrorCode::InvalidBipartition: return "InvalidBipartition";
    case ErrorCode::NotAForest: return "NotAForest";
    case ErrorCode::MissingBipartition: return "MissingBipartition";
    case ErrorCode::InfeasibleDegree: return "InfeasibleDegree";
    case ErrorCode::EmptyChoiceSet: return "EmptyChoiceSet";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library is reported as an Error carrying
/// a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace coopcolor
