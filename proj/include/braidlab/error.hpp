#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace braidlab {

enum class ErrorCode {
  InvalidArgument,
  IllegalMove,
  IndexOutOfRange,
  NotPositive,
  InexactDivision,
  EmptyInput,
  OutOfDomain,
  NotCoprime,
  SignPatternBroken,
  ZeroDeterminantFamily,
  UnsupportedPair,
  OutOfCoveredRange,
  NotApplicable,
  BoundViolated,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so that
// callers (and the CLI) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace braidlab
