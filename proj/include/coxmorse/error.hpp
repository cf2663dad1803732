#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxmorse {

enum class ErrorCode {
  InvalidMatrix,
  GroupTooLarge,
  MixedSystems,
  InvalidSubset,
  InvalidElement,
  NotComparable,
  NotPure,
  IntervalTooLarge,
  ELViolation,
  NotReducedWordOfW0,
  OverlappingSubsets,
  NotAMatching,
  EmptyInterval,
  CyclicMatching,
  NotMinimalCosetRep,
  LemmaFalsified,
  AnchorViolation,
  PropositionFalsified,
  NonUniqueMaximum,
  CorollaryFalsified,
  TheoremFalsified,
  NonUniqueOptimum,
  CapExceeded,
  Usage,
  Internal,
};

std::string_view to_string(ErrorCode code);

/// True for codes that report a counterexample to a proven statement
/// rather than bad input.
bool is_falsification(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace coxmorse
