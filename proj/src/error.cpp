#include "pathclass/error.hpp"

namespace pathclass {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidCharacter: return "InvalidCharacter";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::NoOccurrenceAtPosition: return "NoOccurrenceAtPosition";
    case ErrorCode::IllFormedDecomposition: return "IllFormedDecomposition";
    case ErrorCode::NotEquivalent: return "NotEquivalent";
    case ErrorCode::NotBallot: return "NotBallot";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::NotInRepresentativeSet: return "NotInRepresentativeSet";
    case ErrorCode::NotSecondForm: return "NotSecondForm";
    case ErrorCode::LengthTooSmall: return "LengthTooSmall";
    case ErrorCode::OrderMismatch: return "OrderMismatch";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NotASimpleRoot: return "NotASimpleRoot";
    case ErrorCode::NoRationalSeed: return "NoRationalSeed";
    case ErrorCode::UnsupportedTau: return "UnsupportedTau";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::MethodUnavailable: return "MethodUnavailable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

InvalidCharacter::InvalidCharacter(std::size_t position, char c)
    : Error(ErrorCode::InvalidCharacter,
            "unexpected character '" + std::string(1, c) + "' at position " +
                std::to_string(position)),
      position_(position) {}

}  // namespace pathclass
