#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxmorse/coxeter_system.hpp"
#include "coxmorse/poset.hpp"
#include "coxmorse/reflection_order.hpp"

namespace coxmorse {

/// Bruhat interval [v, w] with its Hasse diagram. The cover lo <. hi carries
/// the label lo * hi^{-1} (a reflection), stored as the reflection's element id.
struct LabeledInterval {
  const CoxeterSystem* system = nullptr;
  Element bottom;
  Element top;
  std::vector<Element> members;  // id order; poset index k <-> members[k]
  FinitePoset poset;             // dim = l(x) - l(v)

  std::size_t size() const noexcept { return members.size(); }
  std::optional<std::size_t> find(Element x) const;
  /// Throws InvalidElement if x is not in the interval.
  std::size_t index_of(Element x) const;
  Element label(const CoverEdge& e) const { return system->element(static_cast<ElementId>(e.label)); }
};

/// Throws NotComparable unless v <= w.
LabeledInterval labeled_interval(const CoxeterSystem& W, Element v, Element w);

/// Involution on the elements of a poset; mate(i) == i marks a fixed point.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::size_t> mate);
  static Matching unmatched(std::size_t n);

  std::size_t size() const noexcept { return mate_.size(); }
  std::size_t mate(std::size_t i) const { return mate_[i]; }
  bool is_matched(std::size_t i) const { return mate_[i] != i; }
  bool complete() const;
  void match(std::size_t a, std::size_t b);

  /// Matched pairs (lo, hi) oriented by the poset order, sorted by lo.
  std::vector<std::pair<std::size_t, std::size_t>> pairs(const FinitePoset& P) const;
  std::vector<std::size_t> fixed_points() const;
  const std::vector<std::size_t>& mates() const noexcept { return mate_; }

  /// Checks the involution property and that every pair is a cover of P.
  /// Throws NotAMatching.
  void validate(const FinitePoset& P) const;

  friend bool operator==(const Matching&, const Matching&) = default;

 private:
  std::vector<std::size_t> mate_;
};

/// Selects, at every element x, the incident Hasse edge (up or down) whose
/// label is largest under `rank`, and checks that the selections pair up.
/// Throws EmptyInterval for an empty poset and NotAMatching, with the
/// offending element, when the selections do not form an involution.
Matching max_label_matching(const FinitePoset& P, const LabelRank& rank);
/// The matching M([v, w]) for the interval under the reflection order.
Matching build_matching(const LabeledInterval& interval, const ReflectionOrder& order);

struct AcyclicityReport {
  bool acyclic = true;
  std::vector<std::size_t> cycle;  // closed walk, first element repeated at the end
};

/// Matched covers point up, all other covers point down; looks for a
/// directed cycle by iterative depth-first search in index order.
AcyclicityReport is_acyclic(const FinitePoset& P, const Matching& M);

/// M maps Q into itself. `Q` is a list of element indices.
bool is_M_subset(const Matching& M, const std::vector<std::size_t>& Q);
bool is_M_subset(const Matching& M, const boost::dynamic_bitset<>& Q);

struct MorseSummary {
  std::map<int, std::size_t> counts;  // dim -> unmatched count, every dim of P present
  bool acyclic = false;
  bool certificate = false;           // exactly one unmatched element, of dim 0
  std::size_t unmatched = 0;
};

/// Throws CyclicMatching if M is not acyclic.
MorseSummary morse_counts(const FinitePoset& P, const Matching& M);

struct AugmentedPoset {
  FinitePoset poset;   // index 0 is the added bottom, dim -1; P's index i becomes i + 1
  Matching matching;
};

/// Adds a least element below P and matches it with the unmatched minimal
/// element of least index, if any. Throws CyclicMatching if the result has a
/// cycle.
AugmentedPoset augment_with_bottom(const FinitePoset& P, const Matching& M);

struct ShellingReport {
  std::size_t coatom_prefixes = 0;   // unions checked
  std::size_t atom_prefixes = 0;
  bool top_complement = false;       // [v,w] minus lower coatom intervals == [M(w), w]
};

/// Shelling-compatibility of M([v, w]): with coatoms w_1, ..., w_n sorted by
/// label, every union of [v, w_i] over i < k is an M-subset; dually for the
/// atoms and the intervals [v_i, w]; and the complement of the union over
/// i < n is exactly [M(w), w]. Throws TheoremFalsified.
ShellingReport verify_shelling_subsets(const LabeledInterval& interval, const ReflectionOrder& order,
                                       const Matching& M);

/// Element names of each matched pair (lo, hi), for reports.
std::vector<std::pair<std::string, std::string>> named_pairs(const FinitePoset& P, const Matching& M);

}  // namespace coxmorse
