#include "bendix/error.hpp"

namespace bendix {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::NonGeneric: return "NonGeneric";
    case ErrorCode::EmptySpace: return "EmptySpace";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::NotLopsided: return "NotLopsided";
    case ErrorCode::LaminarViolation: return "LaminarViolation";
    case ErrorCode::TOutOfImage: return "TOutOfImage";
    case ErrorCode::NotFull: return "NotFull";
    case ErrorCode::NotToric: return "NotToric";
    case ErrorCode::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message, std::string context)
    : std::runtime_error(message), code_(code), context_(std::move(context)) {}

}  // namespace bendix
