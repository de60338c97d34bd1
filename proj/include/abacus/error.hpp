#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace abacus {

enum class ErrorCode {
  Overflow,
  InvalidConfig,
  ExchangeUnavailable,
  IllegalGestureForRegister,
  OutOfRange,
  UnreplayableTrace,
  OutOfSupportedRange,
  UnparsableWords,
  NoMirrorInscription,
  UnsupportedValue,
  MalformedDrawing,
  AmbiguousDrawing,
  InvalidSpec,
  InvalidArgument,
  NotFound,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// service and CLI turn `code()` into the wire-level error identifier.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace abacus
