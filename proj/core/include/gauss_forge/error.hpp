#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gauss_forge {

enum class ErrorCode {
  // diagram validation
  DegenerateHeight,
  NonTransverse,
  Validation,
  KindMismatch,
  ParamCollision,
  NonIntegerInvariant,
  // resolution
  NotATriple,
  NonGenericOffsets,
  ScaleOverflow,
  UnknownCrossing,
  // geometry
  DegenerateProjection,
  SnapAmbiguity,
  IsotopyViolation,
  GenerationExhausted,
  // oracles
  SizeLimit,
  NonzeroPairwiseLinking,
  IntersectingInputs,
  // corpus / io
  UnknownEntry,
  Parse,
  Io,
};

std::string_view error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. `code()` is stable and machine readable;
/// `what()` carries a human-oriented description of the first violated condition.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gauss_forge
