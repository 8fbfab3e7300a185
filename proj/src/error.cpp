#include "hyperkey/error.hpp"

namespace hyperkey {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidHypergraph: return "InvalidHypergraph";
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::EmptyVertexSet: return "EmptyVertexSet";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotCycleFree: return "NotCycleFree";
    case ErrorKind::NotMCH: return "NotMCH";
    case ErrorKind::NegativeRate: return "NegativeRate";
    case ErrorKind::SubsetTooLarge: return "SubsetTooLarge";
    case ErrorKind::SubsetOutsideBlock: return "SubsetOutsideBlock";
    case ErrorKind::NotFundamentalBlock: return "NotFundamentalBlock";
    case ErrorKind::VertexNotInBlock: return "VertexNotInBlock";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::RankDefect: return "RankDefect";
    case ErrorKind::LatticeViolation: return "LatticeViolation";
    case ErrorKind::SchemeUnverified: return "SchemeUnverified";
    case ErrorKind::KeyRateExceedsCapacity: return "KeyRateExceedsCapacity";
    case ErrorKind::StateSpaceTooLarge: return "StateSpaceTooLarge";
    case ErrorKind::GenerationBudgetExhausted: return "GenerationBudgetExhausted";
    case ErrorKind::WeightsNotConvex: return "WeightsNotConvex";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateEdgeId: return "DuplicateEdgeId";
    case ErrorKind::NonpositiveWeight: return "NonpositiveWeight";
    case ErrorKind::InvalidParameters: return "InvalidParameters";
  }
  return "Unknown";
}

}  // namespace hyperkey
