#include "tropnev/error.hpp"

namespace tropnev {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::EmptyWindow: return "EmptyWindow";
    case ErrorCode::NonPositiveEps: return "NonPositiveEps";
    case ErrorCode::DiscontinuityDetected: return "DiscontinuityDetected";
    case ErrorCode::AllNegInfinity: return "AllNegInfinity";
    case ErrorCode::NonPositiveRadius: return "NonPositiveRadius";
    case ErrorCode::WindowOutOfRange: return "WindowOutOfRange";
    case ErrorCode::PointOutsideDisk: return "PointOutsideDisk";
    case ErrorCode::NotWellDefined: return "NotWellDefined";
    case ErrorCode::RadiusBelowThreshold: return "RadiusBelowThreshold";
    case ErrorCode::ZeroShift: return "ZeroShift";
    case ErrorCode::BadWindow: return "BadWindow";
    case ErrorCode::NonPositiveValues: return "NonPositiveValues";
    case ErrorCode::NotEntireComponent: return "NotEntireComponent";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::MissingPurePowers: return "MissingPurePowers";
    case ErrorCode::NonLinearComponents: return "NonLinearComponents";
    case ErrorCode::TooManyComponents: return "TooManyComponents";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownReference: return "UnknownReference";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace tropnev
