#pragma once

#include <stdexcept>
#include <string>

namespace mspace {

// Machine-readable failure categories; the CLI prints these codes verbatim.
enum class ErrorCode {
  Validation,
  Parse,
  Pole,
  OutOfDisk,
  OffCircle,
  MixedSpec,
  WindowTooLarge,
  EmptySpectrum,
  DegenerateWindow,
  SampleAlignment,
  LengthMismatch,
  InsufficientPoints,
  Overflow,
  CoverageViolation,
  Internal,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Validation: return "VALIDATION";
    case ErrorCode::Parse: return "PARSE";
    case ErrorCode::Pole: return "POLE";
    case ErrorCode::OutOfDisk: return "OUT_OF_DISK";
    case ErrorCode::OffCircle: return "OFF_CIRCLE";
    case ErrorCode::MixedSpec: return "MIXED_SPEC";
    case ErrorCode::WindowTooLarge: return "WINDOW_TOO_LARGE";
    case ErrorCode::EmptySpectrum: return "EMPTY_SPECTRUM";
    case ErrorCode::DegenerateWindow: return "DEGENERATE_WINDOW";
    case ErrorCode::SampleAlignment: return "SAMPLE_ALIGNMENT";
    case ErrorCode::LengthMismatch: return "LENGTH_MISMATCH";
    case ErrorCode::InsufficientPoints: return "INSUFFICIENT_POINTS";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::CoverageViolation: return "COVERAGE_VIOLATION";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace mspace
