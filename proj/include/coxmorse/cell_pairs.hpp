#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "coxmorse/coxeter_system.hpp"
#include "coxmorse/poset.hpp"

namespace coxmorse {

using CellPair = std::pair<Element, Element>;

/// Pairs (x, y) with x <= y, ordered as closed cells: (x', y') <= (x, y) iff
/// x <= x' <= y' <= y. The dimension of (x, y) is l(y) - l(x).
struct CellPairPoset {
  const CoxeterSystem* system = nullptr;
  std::vector<CellPair> pairs;  // sorted by (x.id, y.id); poset index k <-> pairs[k]
  FinitePoset poset;

  std::size_t size() const noexcept { return pairs.size(); }
  std::optional<std::size_t> find(Element x, Element y) const;
  std::size_t index_of(Element x, Element y) const;  // throws InvalidElement
};

/// Sorts and deduplicates `pairs`; throws InvalidElement if some x is not below y.
CellPairPoset cell_pair_poset(const CoxeterSystem& W, std::vector<CellPair> pairs);

bool cell_leq(const CoxeterSystem& W, const CellPair& lower, const CellPair& upper);

std::string format_pair(const CoxeterSystem& W, const CellPair& p);

}  // namespace coxmorse
