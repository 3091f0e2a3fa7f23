#pragma once

#include <array>
#include <stdexcept>
#include <string>

namespace katospec {

enum class ErrorCode {
  EntryOutOfRange,
  BadUnit,
  NotCommutative,
  NotAssociative,
  CarrierTooLarge,
  NotT0,
  NoTop,
  NotMeetSemilattice,
  EmptyFamily,
  NotMMorphism,
  TargetNotMCJS,
  BaseTooLarge,
  BaseNotMonoidal,
  ImageNotPrime,
  NotPrime,
  OrderTooLarge,
  SizeTooLarge,
  SearchSpaceTooLarge,
  WitnessMismatch,
  BadInput,
};

const char* error_code_name(ErrorCode code);

// Carries a machine-readable code plus up to three integer witnesses
// (element/point indices; meaning depends on the code).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, int a = -1, int b = -1, int c = -1)
      : std::runtime_error(message), code(code), args{a, b, c} {}

  ErrorCode code;
  std::array<int, 3> args;
};

}  // namespace katospec
