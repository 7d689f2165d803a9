#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropnev {

enum class ErrorCode {
  ZeroPolynomial,
  EmptyWindow,
  NonPositiveEps,
  DiscontinuityDetected,
  AllNegInfinity,
  NonPositiveRadius,
  WindowOutOfRange,
  PointOutsideDisk,
  NotWellDefined,
  RadiusBelowThreshold,
  ZeroShift,
  BadWindow,
  NonPositiveValues,
  NotEntireComponent,
  ArityMismatch,
  MissingPurePowers,
  NonLinearComponents,
  TooManyComponents,
  SyntaxError,
  UnknownReference,
  DuplicateName,
  InvalidArgument,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropnev
