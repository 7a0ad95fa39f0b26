#include "sascone/error.hpp"

namespace sascone {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::SmoothnessViolation: return "SmoothnessViolation";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NonMonotoneBase: return "NonMonotoneBase";
    case ErrorKind::OddTotal: return "OddTotal";
    case ErrorKind::NotFano: return "NotFano";
    case ErrorKind::ProductCase: return "ProductCase";
    case ErrorKind::NonpositiveVolume: return "NonpositiveVolume";
    case ErrorKind::BracketFailure: return "BracketFailure";
    case ErrorKind::BoxViolation: return "BoxViolation";
    case ErrorKind::Mismatch: return "Mismatch";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotCoprime:
    case ErrorKind::SmoothnessViolation:
    case ErrorKind::Overflow:
      return 2;
    case ErrorKind::Mismatch:
      return 4;
    default:
      return 3;
  }
}

}  // namespace sascone
