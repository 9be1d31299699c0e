#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lamcf {

enum class ErrorCode {
  NegativeInput,
  DepthExceeded,
  InvalidTerm,
  PeriodNotFound,
  NotUnimodular,
  ImageNotPositive,
  UnsupportedKind,
  ZeroDenominator,
  NotDeterminantOne,
  IdentityMatrix,
  NotHyperbolic,
  NotDecomposable,
  PoleAt,
  InvalidLevel,
  LevelTooLarge,
  UnsupportedIndex,
  NoAdmissibleTerm,
  SumMismatch,
  PartTooSmall,
  GenusTooSmall,
  GenusOutOfRange,
  LevelMismatch,
  EmptyStream,
  InvalidDeltaForLevel,
  FixedPointAtInfinity,
  InvalidViewport,
  UnknownPredicate,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every library operation. The code is stable and
/// is what the CLI reports in its `{"error": ...}` object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string detail() const { return what(); }

 private:
  ErrorCode code_;
};

}  // namespace lamcf
