#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pathclass {

enum class ErrorCode {
  InvalidCharacter,
  BoundExceeded,
  EmptyPattern,
  NoOccurrenceAtPosition,
  IllFormedDecomposition,
  NotEquivalent,
  NotBallot,
  NotCanonical,
  NotInRepresentativeSet,
  NotSecondForm,
  LengthTooSmall,
  OrderMismatch,
  ZeroConstantTerm,
  NotASimpleRoot,
  NoRationalSeed,
  UnsupportedTau,
  InvalidArgument,
  MethodUnavailable,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; callers
// that care about the category switch on code() instead of catching subtypes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class InvalidCharacter : public Error {
 public:
  InvalidCharacter(std::size_t position, char c);

  // 1-based, like every other position in the library.
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pathclass
