#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ybe {

enum class ErrorCode {
  CapExceeded,
  Overflow,
  NotPermutationRow,
  NotInvolutive,
  BraidFails,
  DegenerateTau,
  RetractIllFormed,
  NotLevel2,
  NoUnitRow,
  PiIncompatible,
  TooLarge,
  BadParams,
  BadOrder,
  NotCycleBase,
  BadDescriptor,
  ParseError,
};

inline const char* to_string(ErrorCode code);

// All library failures are reported through this type. `witness` carries the
// offending point tuple when there is one (e.g. (x,y,z) for BraidFails).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string const& what, std::vector<long long> witness = {})
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code),
        witness_(std::move(witness)) {}

  ErrorCode code() const noexcept { return code_; }
  std::vector<long long> const& witness() const noexcept { return witness_; }

 private:
  ErrorCode code_;
  std::vector<long long> witness_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NotPermutationRow: return "NotPermutationRow";
    case ErrorCode::NotInvolutive: return "NotInvolutive";
    case ErrorCode::BraidFails: return "BraidFails";
    case ErrorCode::DegenerateTau: return "DegenerateTau";
    case ErrorCode::RetractIllFormed: return "RetractIllFormed";
    case ErrorCode::NotLevel2: return "NotLevel2";
    case ErrorCode::NoUnitRow: return "NoUnitRow";
    case ErrorCode::PiIncompatible: return "PiIncompatible";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::NotCycleBase: return "NotCycleBase";
    case ErrorCode::BadDescriptor: return "BadDescriptor";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace ybe
