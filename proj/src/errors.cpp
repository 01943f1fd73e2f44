#include "skein/errors.hpp"

namespace skein {

const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexError: return "IndexError";
    case ErrorKind::WidthMismatch: return "WidthMismatch";
    case ErrorKind::DegenerateIdempotent: return "DegenerateIdempotent";
    case ErrorKind::MixedColors: return "MixedColors";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::SpecializationPole: return "SpecializationPole";
    case ErrorKind::PoleAtRoot: return "PoleAtRoot";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::IntegralityViolation: return "IntegralityViolation";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::BudgetError: return "BudgetError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace skein
