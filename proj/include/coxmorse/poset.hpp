#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace coxmorse {

using Label = std::int64_t;
inline constexpr Label kNoLabel = -1;

struct CoverEdge {
  std::size_t lo = 0;
  std::size_t hi = 0;
  Label label = kNoLabel;
};

/// Finite poset on indices 0..n-1 with a stored dimension per element and
/// optionally labeled Hasse edges.
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Relation given as a predicate leq(i, j) meaning i <= j. Verifies the
  /// poset axioms and computes the transitive reduction. `label(lo, hi)` is
  /// queried once per cover.
  static FinitePoset from_relation(std::vector<std::string> names, std::vector<int> dims,
                                   const std::function<bool(std::size_t, std::size_t)>& leq,
                                   const std::function<Label(std::size_t, std::size_t)>& label = {});

  /// Relation is the reflexive-transitive closure of the given covers, which
  /// must form an acyclic graph; edges implied by others are rejected.
  static FinitePoset from_covers(std::vector<std::string> names, std::vector<int> dims, std::vector<CoverEdge> covers);

  std::size_t size() const noexcept { return dims_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  int dim(std::size_t i) const { return dims_[i]; }
  const std::vector<int>& dims() const noexcept { return dims_; }

  bool leq(std::size_t i, std::size_t j) const { return below_[j].test(i); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  const boost::dynamic_bitset<>& below(std::size_t i) const { return below_[i]; }
  const boost::dynamic_bitset<>& above(std::size_t i) const { return above_[i]; }

  /// Covers sorted by (hi, lo).
  const std::vector<CoverEdge>& covers() const noexcept { return covers_; }
  /// Indices into covers() of edges whose lower (resp. upper) end is i.
  const std::vector<std::size_t>& up_edges(std::size_t i) const { return up_[i]; }
  const std::vector<std::size_t>& down_edges(std::size_t i) const { return down_[i]; }
  std::optional<std::size_t> cover_index(std::size_t lo, std::size_t hi) const;
  bool covers_pair(std::size_t lo, std::size_t hi) const { return cover_index(lo, hi).has_value(); }

  std::vector<std::size_t> minimal_elements() const;
  std::vector<std::size_t> maximal_elements() const;

  /// Induced subposet on `members` (in the given order) with inherited covers;
  /// only covers of this poset between members are kept, so this is meant for
  /// convex subsets such as intervals.
  FinitePoset induced(const std::vector<std::size_t>& members) const;

 private:
  void finish();

  std::vector<std::string> names_;
  std::vector<int> dims_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[j][i] iff i <= j
  std::vector<boost::dynamic_bitset<>> above_;  // above_[i][j] iff i <= j
  std::vector<CoverEdge> covers_;
  std::vector<std::vector<std::size_t>> up_;
  std::vector<std::vector<std::size_t>> down_;
};

/// An interval of a poset together with the inclusion map into the parent.
struct PosetInterval {
  FinitePoset poset;
  std::vector<std::size_t> origin;  // local index -> parent index
  std::size_t bottom = 0;           // local indices
  std::size_t top = 0;
};

/// [x, y] = { z : x <= z <= y }. Throws NotComparable unless x <= y.
PosetInterval interval(const FinitePoset& P, std::size_t x, std::size_t y);

/// True iff for all x <= y every maximal chain from x to y has the same length.
bool is_pure(const FinitePoset& P);

/// Every interval of length 2 has exactly four elements. Throws NotPure.
bool is_thin(const FinitePoset& P);

struct MaximalChain {
  std::vector<std::size_t> elements;  // top first, descending by covers
  std::vector<Label> labels;          // labels[k] = label of elements[k+1] <. elements[k]
};

inline constexpr std::size_t kDefaultChainCap = 1'000'000;

/// All maximal chains from x up to y, enumerated by depth-first search in
/// index order. Throws IntervalTooLarge past `cap` chains.
std::vector<MaximalChain> all_maximal_chains(const FinitePoset& P, std::size_t x, std::size_t y,
                                             std::size_t cap = kDefaultChainCap);

/// Position of a label in a total order on labels.
using LabelRank = std::function<int(Label)>;

struct ELReport {
  std::size_t chain_count = 0;
  MaximalChain increasing;        // unique increasing chain (bottom-up reading)
  MaximalChain decreasing;        // unique decreasing chain
  bool increasing_lex_minimal = false;
  bool decreasing_lex_maximal = false;
  bool increasing_dual_maximal = false;  // its top-down label word is the largest top-down word
  bool atom_minimal = false;      // first label of the increasing chain is least among atom labels
  bool coatom_maximal = false;    // last label of the increasing chain is largest among coatom labels
};

/// Checks the EL conditions on [x, y] under the given label order: unique
/// increasing chain that is lexicographically least (and whose top-down
/// reading is the largest top-down reading), unique decreasing chain that is
/// lexicographically largest, and the atom/coatom extremality of the
/// increasing chain. Chains are read bottom-up unless stated. Throws
/// ELViolation with the offending chains on failure.
ELReport check_el_labeling(const FinitePoset& P, const LabelRank& rank, std::size_t x, std::size_t y,
                           std::size_t cap = kDefaultChainCap);

/// Sum over elements of (-1)^dim.
long euler_characteristic(const FinitePoset& P);

}  // namespace coxmorse
