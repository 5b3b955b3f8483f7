#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pingpong {

enum class ErrorCode {
  InputError,
  NotPositiveDefinite,
  Singular,
  NotASubspaceBasis,
  NotIsotropic,
  NotTransverse,
  DegenerateRestriction,
  DegenerateDifference,
  NonPositiveLine,
  NotInInterval,
  NonReducedWord,
  CapacityExceeded,
  Unsupported,
  ContractionViolation,
  NeedLongerPrefix,
  InvalidDomainData,
  NotACycle,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI) can react without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

  ErrorCode code() const noexcept { return code_; }
  /// what() without the code prefix.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace pingpong
