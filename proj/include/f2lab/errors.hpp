#pragma once

#include <stdexcept>
#include <string>

namespace f2lab {

// Failure categories shared by the library and mapped to CLI exit codes.
enum class Err {
  EmptySet,
  DimMismatch,
  OutOfRange,
  ResourceLimit,
  Singleton,
  Disagreement,
  NotNormal,
  StructureViolation,
  SigmaTooLarge,
  CapExceeded,
  Parse,
};

inline const char* to_string(Err e) {
  switch (e) {
    case Err::EmptySet: return "EMPTY_SET";
    case Err::DimMismatch: return "DIM_MISMATCH";
    case Err::OutOfRange: return "OUT_OF_RANGE";
    case Err::ResourceLimit: return "RESOURCE_LIMIT";
    case Err::Singleton: return "SINGLETON";
    case Err::Disagreement: return "DISAGREEMENT";
    case Err::NotNormal: return "NOT_NORMAL";
    case Err::StructureViolation: return "STRUCTURE_VIOLATION";
    case Err::SigmaTooLarge: return "SIGMA_TOO_LARGE";
    case Err::CapExceeded: return "CAP_EXCEEDED";
    case Err::Parse: return "PARSE";
  }
  return "UNKNOWN";
}

class F2Error : public std::runtime_error {
 public:
  F2Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) {
  throw F2Error(code, msg);
}

}  // namespace f2lab
