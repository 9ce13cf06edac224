#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bendix {

enum class ErrorCode {
  InvalidInput,
  ParseError,
  UnknownEdge,
  NonGeneric,
  EmptySpace,
  GuardExceeded,
  NotLopsided,
  LaminarViolation,
  TOutOfImage,
  NotFull,
  NotToric,
  DimensionTooLarge,
  DimensionMismatch,
  Internal,
};

std::string_view to_string(ErrorCode code);

/**
 * The single exception type thrown by the library. `context` carries the
 * offending object in printable form (an edge id, a subset, a value).
 */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {});

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace bendix
