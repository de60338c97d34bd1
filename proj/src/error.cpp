#include "abacus/error.hpp"

namespace abacus {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::ExchangeUnavailable: return "ExchangeUnavailable";
    case ErrorCode::IllegalGestureForRegister: return "IllegalGestureForRegister";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::UnreplayableTrace: return "UnreplayableTrace";
    case ErrorCode::OutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::UnparsableWords: return "UnparsableWords";
    case ErrorCode::NoMirrorInscription: return "NoMirrorInscription";
    case ErrorCode::UnsupportedValue: return "UnsupportedValue";
    case ErrorCode::MalformedDrawing: return "MalformedDrawing";
    case ErrorCode::AmbiguousDrawing: return "AmbiguousDrawing";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFound: return "NotFound";
  }
  return "Unknown";
}

}  // namespace abacus
