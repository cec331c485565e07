#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggp {

enum class ErrorKind {
  NonUnitarySlope,
  GradeConflict,
  InvalidSummand,
  EmptyParameter,
  DimensionMismatch,
  WrongDualitySign,
  FlagContradiction,
  NotContained,
  RankMismatch,
  NoEmbedding,
  MissingTableEntry,
  InvalidContext,
  NotSupercuspidalPacket,
  ChiWAbsent,
  HypothesisViolation,
  EngineInvariant,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the engine carries a kind so that callers (the CLI
// in particular) can map it onto diagnostics or exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  // Hypothesis violations are user-facing preconditions of a computation, as
  // opposed to malformed input.
  bool is_hypothesis_violation() const noexcept {
    return kind_ == ErrorKind::HypothesisViolation || kind_ == ErrorKind::NotSupercuspidalPacket ||
           kind_ == ErrorKind::ChiWAbsent || kind_ == ErrorKind::InvalidContext;
  }

 private:
  ErrorKind kind_;
};

}  // namespace ggp
