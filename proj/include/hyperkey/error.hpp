#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperkey {

enum class ErrorKind {
  InvalidHypergraph,
  UnknownVertex,
  EmptyResult,
  EmptyVertexSet,
  InvalidPartition,
  GroundTooLarge,
  Disconnected,
  NotCycleFree,
  NotMCH,
  NegativeRate,
  SubsetTooLarge,
  SubsetOutsideBlock,
  NotFundamentalBlock,
  VertexNotInBlock,
  InvalidOrder,
  RankDefect,
  LatticeViolation,
  SchemeUnverified,
  KeyRateExceedsCapacity,
  StateSpaceTooLarge,
  GenerationBudgetExhausted,
  WeightsNotConvex,
  ParseError,
  DuplicateEdgeId,
  NonpositiveWeight,
  InvalidParameters,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hyperkey
