#pragma once

#include <stdexcept>
#include <string>

namespace skein {

/// Machine-readable failure categories. The CLI reports the name verbatim.
enum class ErrorKind {
  ParseError,
  IndexError,
  WidthMismatch,
  DegenerateIdempotent,
  MixedColors,
  DivisionByZero,
  SpecializationPole,
  PoleAtRoot,
  NotRepresentable,
  IntegralityViolation,
  NotAKnot,
  BudgetError,
  InvalidArgument,
};

const char* kind_name(ErrorKind k);

class SkeinError : public std::runtime_error {
 public:
  SkeinError(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Parse failure with the offending character offset.
class ParseError : public SkeinError {
 public:
  ParseError(size_t position, const std::string& message)
      : SkeinError(ErrorKind::ParseError, message + " at position " + std::to_string(position)),
        position_(position) {}
  size_t position() const { return position_; }

 private:
  size_t position_;
};

}  // namespace skein
