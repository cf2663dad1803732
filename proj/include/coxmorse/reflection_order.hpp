#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "coxmorse/coxeter_system.hpp"
#include "coxmorse/poset.hpp"

namespace coxmorse {

/// Total order on the reflections of a finite Coxeter group, stored as the
/// inversion sequence of a reduced word of w0 (its provenance).
class ReflectionOrder {
 public:
  ReflectionOrder(const CoxeterSystem& W, std::vector<Element> sequence, Word provenance);

  const std::vector<Element>& sequence() const noexcept { return sequence_; }
  const Word& word() const noexcept { return word_; }
  std::size_t size() const noexcept { return sequence_.size(); }

  /// Position of t, 0-based. Throws InvalidElement if t is not a reflection.
  int rank(Element t) const;
  bool precedes(Element a, Element b) const { return rank(a) < rank(b); }
  /// Rank lookup for reflection element ids used as poset edge labels.
  LabelRank label_rank() const;

  friend bool operator==(const ReflectionOrder& a, const ReflectionOrder& b) { return a.sequence_ == b.sequence_; }

 private:
  const CoxeterSystem* system_;
  std::vector<Element> sequence_;
  Word word_;
  std::vector<int> rank_by_index_;  // indexed by CoxeterSystem::reflection_index
};

/// t_k = s_{i_1} ... s_{i_{k-1}} s_{i_k} s_{i_{k-1}} ... s_{i_1}. Throws
/// NotReducedWordOfW0 unless `word` is a reduced word of the longest element.
ReflectionOrder order_from_reduced_word(const CoxeterSystem& W, const Word& word);

/// Reversed sequence. Its provenance is the reversed word with every letter
/// conjugated by w0, whose inversion sequence is the reversed one.
ReflectionOrder opposite(const CoxeterSystem& W, const ReflectionOrder& order);

struct ValidationReport {
  bool ok = true;
  /// First offending dihedral triple (first, offending, last) in order.
  std::optional<std::array<Element, 3>> violation;
  std::string detail;
};

/// Dihedral criterion: on the reflections of every subgroup <t, t'> the order
/// must read a, aba, ababa, ..., b where {a, b} are the canonical generators of
/// the subgroup (its reflections t with N(t) meeting the subgroup only in t).
ValidationReport validate(const CoxeterSystem& W, const std::vector<Element>& sequence);
inline ValidationReport validate(const CoxeterSystem& W, const ReflectionOrder& order) {
  return validate(W, order.sequence());
}

/// Order with T ∩ W_{J'} as an initial segment and T ∩ W_J as a final
/// segment. Built from w0 = w_{J'} · (w_{J'} w0 w_{J*}) · w_{J*}, where J* is the
/// image of J under conjugation by w0; the suffix w_{J*} contributes exactly
/// the reflections of W_J. Throws OverlappingSubsets unless J ∩ J' = ∅.
ReflectionOrder order_for_springer(const CoxeterSystem& W, GeneratorSet J_prime, GeneratorSet J);

/// Order with N_R(v') as an initial segment, from w0 = v'^{-1} · (v' w0).
ReflectionOrder order_for_fiber(const CoxeterSystem& W, Element v_prime);

/// The generator w0 s w0 for each generator s.
std::vector<Generator> w0_conjugation(const CoxeterSystem& W);

/// Max rank over `first` is below min rank over `second` (true if either is empty).
bool precedes_all(const ReflectionOrder& order, const std::vector<Element>& first, const std::vector<Element>& second);

}  // namespace coxmorse
