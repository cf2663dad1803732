#include "coxmorse/error.hpp"

namespace coxmorse {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::MixedSystems: return "MixedSystems";
    case ErrorCode::InvalidSubset: return "InvalidSubset";
    case ErrorCode::InvalidElement: return "InvalidElement";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::IntervalTooLarge: return "IntervalTooLarge";
    case ErrorCode::ELViolation: return "ELViolation";
    case ErrorCode::NotReducedWordOfW0: return "NotReducedWordOfW0";
    case ErrorCode::OverlappingSubsets: return "OverlappingSubsets";
    case ErrorCode::NotAMatching: return "NotAMatching";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::CyclicMatching: return "CyclicMatching";
    case ErrorCode::NotMinimalCosetRep: return "NotMinimalCosetRep";
    case ErrorCode::LemmaFalsified: return "LemmaFalsified";
    case ErrorCode::AnchorViolation: return "AnchorViolation";
    case ErrorCode::PropositionFalsified: return "PropositionFalsified";
    case ErrorCode::NonUniqueMaximum: return "NonUniqueMaximum";
    case ErrorCode::CorollaryFalsified: return "CorollaryFalsified";
    case ErrorCode::TheoremFalsified: return "TheoremFalsified";
    case ErrorCode::NonUniqueOptimum: return "NonUniqueOptimum";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::Usage: return "UsageError";
    case ErrorCode::Internal: return "InternalError";
  }
  return "UnknownError";
}

bool is_falsification(ErrorCode code) {
  switch (code) {
    case ErrorCode::ELViolation:
    case ErrorCode::NotAMatching:
    case ErrorCode::CyclicMatching:
    case ErrorCode::LemmaFalsified:
    case ErrorCode::AnchorViolation:
    case ErrorCode::PropositionFalsified:
    case ErrorCode::NonUniqueMaximum:
    case ErrorCode::CorollaryFalsified:
    case ErrorCode::TheoremFalsified:
    case ErrorCode::NonUniqueOptimum:
      return true;
    default:
      return false;
  }
}

}  // namespace coxmorse
