#include "braidlab/error.hpp"

namespace braidlab {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::IllegalMove: return "IllegalMove";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::InexactDivision: return "InexactDivision";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::OutOfDomain: return "OutOfDomain";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::SignPatternBroken: return "SignPatternBroken";
    case ErrorCode::ZeroDeterminantFamily: return "ZeroDeterminantFamily";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::OutOfCoveredRange: return "OutOfCoveredRange";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::BoundViolated: return "BoundViolated";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace braidlab
