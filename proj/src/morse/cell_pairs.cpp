#include "coxmorse/cell_pairs.hpp"

#include <algorithm>

#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

bool id_less(const CellPair& a, const CellPair& b) {
  return std::pair(a.first.id, a.second.id) < std::pair(b.first.id, b.second.id);
}

}  // namespace

std::optional<std::size_t> CellPairPoset::find(Element x, Element y) const {
  const CellPair key{x, y};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), key, id_less);
  if (it == pairs.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - pairs.begin());
}

std::size_t CellPairPoset::index_of(Element x, Element y) const {
  auto k = find(x, y);
  if (!k) fail(ErrorCode::InvalidElement, format_pair(*system, {x, y}) + " is not in the poset");
  return *k;
}

bool cell_leq(const CoxeterSystem& W, const CellPair& lower, const CellPair& upper) {
  return W.bruhat_leq(upper.first, lower.first) && W.bruhat_leq(lower.first, lower.second) &&
         W.bruhat_leq(lower.second, upper.second);
}

std::string format_pair(const CoxeterSystem& W, const CellPair& p) {
  return "(" + format_element(W, p.first, '.') + ", " + format_element(W, p.second, '.') + ")";
}

CellPairPoset cell_pair_poset(const CoxeterSystem& W, std::vector<CellPair> pairs) {
  std::sort(pairs.begin(), pairs.end(), id_less);
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  std::vector<std::string> names;
  std::vector<int> dims;
  for (const auto& p : pairs) {
    if (!W.bruhat_leq(p.first, p.second)) fail(ErrorCode::InvalidElement, format_pair(W, p) + " is not a Bruhat pair");
    names.push_back(format_pair(W, p));
    dims.push_back(W.length(p.second) - W.length(p.first));
  }
  CellPairPoset out;
  out.system = &W;
  out.poset = FinitePoset::from_relation(std::move(names), std::move(dims),
                                         [&](std::size_t i, std::size_t j) { return cell_leq(W, pairs[i], pairs[j]); });
  out.pairs = std::move(pairs);
  return out;
}

}  // namespace coxmorse
