#include "katospec/errors.hpp"

namespace katospec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::BadUnit: return "BadUnit";
    case ErrorCode::NotCommutative: return "NotCommutative";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::NoTop: return "NoTop";
    case ErrorCode::NotMeetSemilattice: return "NotMeetSemilattice";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NotMMorphism: return "NotMMorphism";
    case ErrorCode::TargetNotMCJS: return "TargetNotMCJS";
    case ErrorCode::BaseTooLarge: return "BaseTooLarge";
    case ErrorCode::BaseNotMonoidal: return "BaseNotMonoidal";
    case ErrorCode::ImageNotPrime: return "ImageNotPrime";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::WitnessMismatch: return "WitnessMismatch";
    case ErrorCode::BadInput: return "BadInput";
  }
  return "UnknownError";
}

}  // namespace katospec
