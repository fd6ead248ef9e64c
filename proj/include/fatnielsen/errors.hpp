#pragma once

#include <stdexcept>
#include <string>

namespace fatnielsen {

enum class ErrorKind {
  UnknownLetter,
  ParseError,
  UsageError,
  PreconditionViolation,
  BoundaryNotPreserved,
  InvalidMove,
  InvalidSpan,
  InvalidSlide,
  InapplicableMove,
  InternalInvariantViolation,
  StuckDomain,
  CompositionMismatch,
  MalformedTriangulation,
  NotFlippable,
  NotPentagonConfiguration,
  MultiArcDiscrepancy,
  SearchBudgetExceeded,
};

const char* to_string(ErrorKind kind);

// Base of every error raised by the library. The kind is what the CLI maps to
// an exit code and what tests match on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fatnielsen
