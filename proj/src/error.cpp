#include "lamcf/error.hpp"

namespace lamcf {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::DepthExceeded: return "DepthExceeded";
    case ErrorCode::InvalidTerm: return "InvalidTerm";
    case ErrorCode::PeriodNotFound: return "PeriodNotFound";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::ImageNotPositive: return "ImageNotPositive";
    case ErrorCode::UnsupportedKind: return "UnsupportedKind";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotDeterminantOne: return "NotDeterminantOne";
    case ErrorCode::IdentityMatrix: return "IdentityMatrix";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NotDecomposable: return "NotDecomposable";
    case ErrorCode::PoleAt: return "PoleAt";
    case ErrorCode::InvalidLevel: return "InvalidLevel";
    case ErrorCode::LevelTooLarge: return "LevelTooLarge";
    case ErrorCode::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorCode::NoAdmissibleTerm: return "NoAdmissibleTerm";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::PartTooSmall: return "PartTooSmall";
    case ErrorCode::GenusTooSmall: return "GenusTooSmall";
    case ErrorCode::GenusOutOfRange: return "GenusOutOfRange";
    case ErrorCode::LevelMismatch: return "LevelMismatch";
    case ErrorCode::EmptyStream: return "EmptyStream";
    case ErrorCode::InvalidDeltaForLevel: return "InvalidDeltaForLevel";
    case ErrorCode::FixedPointAtInfinity: return "FixedPointAtInfinity";
    case ErrorCode::InvalidViewport: return "InvalidViewport";
    case ErrorCode::UnknownPredicate: return "UnknownPredicate";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace lamcf
