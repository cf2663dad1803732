#include "coxmorse/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "coxmorse/error.hpp"

namespace coxmorse {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::size_t> members_of(const Bits& bits) {
  std::vector<std::size_t> out;
  for (auto i = bits.find_first(); i != Bits::npos; i = bits.find_next(i)) out.push_back(i);
  return out;
}

// Linear extension: strictly smaller elements have strictly fewer elements below.
std::vector<std::size_t> linear_extension(const FinitePoset& P) {
  std::vector<std::size_t> order(P.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::size_t> count(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) count[i] = P.below(i).count();
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return count[a] < count[b]; });
  return order;
}

std::string describe_chain(const FinitePoset& P, const MaximalChain& c) {
  std::ostringstream out;
  for (std::size_t k = c.elements.size(); k-- > 0;) {
    out << P.name(c.elements[k]);
    if (k) out << " < ";
  }
  return out.str();
}

}  // namespace

FinitePoset FinitePoset::from_relation(std::vector<std::string> names, std::vector<int> dims,
                                       const std::function<bool(std::size_t, std::size_t)>& leq,
                                       const std::function<Label(std::size_t, std::size_t)>& label) {
  const auto n = dims.size();
  if (names.size() != n) fail(ErrorCode::Internal, "names and dims differ in size");
  FinitePoset P;
  P.names_ = std::move(names);
  P.dims_ = std::move(dims);
  P.below_.assign(n, Bits(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (leq(i, j)) P.below_[j].set(i);
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!P.below_[j].test(j)) fail(ErrorCode::Internal, "relation is not reflexive at " + P.names_[j]);
    for (auto i = P.below_[j].find_first(); i != Bits::npos; i = P.below_[j].find_next(i)) {
      if (i != j && P.below_[i].test(j)) {
        fail(ErrorCode::Internal, "relation is not antisymmetric: " + P.names_[i] + ", " + P.names_[j]);
      }
      if (!P.below_[i].is_subset_of(P.below_[j])) {
        fail(ErrorCode::Internal, "relation is not transitive below " + P.names_[j]);
      }
    }
  }
  P.above_.assign(n, Bits(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (auto i = P.below_[j].find_first(); i != Bits::npos; i = P.below_[j].find_next(i)) P.above_[i].set(j);
  }
  for (std::size_t hi = 0; hi < n; ++hi) {
    Bits strictly_below = P.below_[hi];
    strictly_below.reset(hi);
    for (auto lo = strictly_below.find_first(); lo != Bits::npos; lo = strictly_below.find_next(lo)) {
      if ((P.above_[lo] & strictly_below).count() == 1) {
        P.covers_.push_back({lo, hi, label ? label(lo, hi) : kNoLabel});
      }
    }
  }
  P.finish();
  return P;
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> names, std::vector<int> dims, std::vector<CoverEdge> covers) {
  const auto n = dims.size();
  if (names.size() != n) fail(ErrorCode::Internal, "names and dims differ in size");
  std::vector<std::vector<std::size_t>> up(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : covers) {
    if (e.lo >= n || e.hi >= n || e.lo == e.hi) fail(ErrorCode::Internal, "bad cover edge");
    up[e.lo].push_back(e.hi);
    ++indegree[e.hi];
  }
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) order.push_back(i);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (auto hi : up[order[head]]) {
      if (--indegree[hi] == 0) order.push_back(hi);
    }
  }
  if (order.size() != n) fail(ErrorCode::Internal, "cover edges contain a directed cycle");

  FinitePoset P;
  P.names_ = std::move(names);
  P.dims_ = std::move(dims);
  P.below_.assign(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i) P.below_[i].set(i);
  std::vector<std::vector<std::size_t>> down(n);
  for (const auto& e : covers) down[e.hi].push_back(e.lo);
  for (auto v : order) {
    for (auto lo : down[v]) P.below_[v] |= P.below_[lo];
  }
  P.above_.assign(n, Bits(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (auto i = P.below_[j].find_first(); i != Bits::npos; i = P.below_[j].find_next(i)) P.above_[i].set(j);
  }
  for (const auto& e : covers) {
    Bits between = P.above_[e.lo] & P.below_[e.hi];
    if (between.count() != 2) {
      fail(ErrorCode::Internal, "edge " + P.names_[e.lo] + " < " + P.names_[e.hi] + " is not a cover");
    }
  }
  std::sort(covers.begin(), covers.end(),
            [](const CoverEdge& a, const CoverEdge& b) { return std::tie(a.hi, a.lo) < std::tie(b.hi, b.lo); });
  if (std::adjacent_find(covers.begin(), covers.end(), [](const CoverEdge& a, const CoverEdge& b) {
        return a.hi == b.hi && a.lo == b.lo;
      }) != covers.end()) {
    fail(ErrorCode::Internal, "duplicate cover edge");
  }
  P.covers_ = std::move(covers);
  P.finish();
  return P;
}

void FinitePoset::finish() {
  const auto n = size();
  up_.assign(n, {});
  down_.assign(n, {});
  for (std::size_t k = 0; k < covers_.size(); ++k) {
    up_[covers_[k].lo].push_back(k);
    down_[covers_[k].hi].push_back(k);
  }
}

std::optional<std::size_t> FinitePoset::cover_index(std::size_t lo, std::size_t hi) const {
  for (auto k : up_[lo]) {
    if (covers_[k].hi == hi) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> FinitePoset::minimal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (down_[i].empty()) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (up_[i].empty()) out.push_back(i);
  }
  return out;
}

FinitePoset FinitePoset::induced(const std::vector<std::size_t>& members) const {
  const auto m = members.size();
  std::vector<std::int64_t> local(size(), -1);
  for (std::size_t k = 0; k < m; ++k) local[members[k]] = static_cast<std::int64_t>(k);
  FinitePoset Q;
  Q.dims_.reserve(m);
  Q.names_.reserve(m);
  for (auto i : members) {
    Q.dims_.push_back(dims_[i]);
    Q.names_.push_back(names_[i]);
  }
  Q.below_.assign(m, Bits(m));
  Q.above_.assign(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (leq(members[a], members[b])) {
        Q.below_[b].set(a);
        Q.above_[a].set(b);
      }
    }
  }
  for (const auto& e : covers_) {
    if (local[e.lo] >= 0 && local[e.hi] >= 0) {
      Q.covers_.push_back({static_cast<std::size_t>(local[e.lo]), static_cast<std::size_t>(local[e.hi]), e.label});
    }
  }
  std::sort(Q.covers_.begin(), Q.covers_.end(),
            [](const CoverEdge& a, const CoverEdge& b) { return std::tie(a.hi, a.lo) < std::tie(b.hi, b.lo); });
  Q.finish();
  return Q;
}

PosetInterval interval(const FinitePoset& P, std::size_t x, std::size_t y) {
  if (!P.leq(x, y)) fail(ErrorCode::NotComparable, P.name(x) + " is not below " + P.name(y));
  PosetInterval out;
  out.origin = members_of(P.above(x) & P.below(y));
  out.poset = P.induced(out.origin);
  for (std::size_t k = 0; k < out.origin.size(); ++k) {
    if (out.origin[k] == x) out.bottom = k;
    if (out.origin[k] == y) out.top = k;
  }
  return out;
}

bool is_pure(const FinitePoset& P) {
  const auto order = linear_extension(P);
  const auto n = P.size();
  std::vector<int> shortest(n), longest(n);
  for (std::size_t x = 0; x < n; ++x) {
    const auto& up = P.above(x);
    for (auto z : order) {
      if (!up.test(z)) continue;
      if (z == x) {
        shortest[z] = longest[z] = 0;
        continue;
      }
      int lo = -1, hi = -1;
      for (auto k : P.down_edges(z)) {
        const auto below = P.covers()[k].lo;
        if (!up.test(below)) continue;
        lo = lo < 0 ? shortest[below] + 1 : std::min(lo, shortest[below] + 1);
        hi = std::max(hi, longest[below] + 1);
      }
      shortest[z] = lo;
      longest[z] = hi;
      if (lo != hi) return false;
    }
  }
  return true;
}

bool is_thin(const FinitePoset& P) {
  if (!is_pure(P)) fail(ErrorCode::NotPure, "thinness is defined for pure posets only");
  for (std::size_t x = 0; x < P.size(); ++x) {
    // Elements two covers above x.
    Bits two_up(P.size());
    for (auto k : P.up_edges(x)) {
      for (auto k2 : P.up_edges(P.covers()[k].hi)) two_up.set(P.covers()[k2].hi);
    }
    for (auto y = two_up.find_first(); y != Bits::npos; y = two_up.find_next(y)) {
      if ((P.above(x) & P.below(y)).count() != 4) return false;
    }
  }
  return true;
}

std::vector<MaximalChain> all_maximal_chains(const FinitePoset& P, std::size_t x, std::size_t y, std::size_t cap) {
  if (!P.leq(x, y)) fail(ErrorCode::NotComparable, P.name(x) + " is not below " + P.name(y));
  const Bits inside = P.above(x) & P.below(y);
  std::vector<MaximalChain> chains;
  std::vector<std::size_t> path{x};
  std::vector<Label> labels;
  // Iterative DFS: frame holds the element and the next up-edge to try.
  std::vector<std::size_t> next_edge{0};
  while (!path.empty()) {
    const auto top = path.back();
    if (top == y) {
      if (chains.size() >= cap) fail(ErrorCode::IntervalTooLarge, "more than " + std::to_string(cap) + " maximal chains");
      MaximalChain c;
      c.elements.assign(path.rbegin(), path.rend());
      c.labels.assign(labels.rbegin(), labels.rend());
      chains.push_back(std::move(c));
      path.pop_back();
      next_edge.pop_back();
      if (!labels.empty()) labels.pop_back();
      continue;
    }
    const auto& ups = P.up_edges(top);
    auto& idx = next_edge.back();
    while (idx < ups.size() && !inside.test(P.covers()[ups[idx]].hi)) ++idx;
    if (idx == ups.size()) {
      path.pop_back();
      next_edge.pop_back();
      if (!labels.empty()) labels.pop_back();
      continue;
    }
    const auto& edge = P.covers()[ups[idx++]];
    path.push_back(edge.hi);
    labels.push_back(edge.label);
    next_edge.push_back(0);
  }
  return chains;
}

ELReport check_el_labeling(const FinitePoset& P, const LabelRank& rank, std::size_t x, std::size_t y, std::size_t cap) {
  auto chains = all_maximal_chains(P, x, y, cap);
  ELReport report;
  report.chain_count = chains.size();

  // Bottom-up rank words.
  std::vector<std::vector<int>> words;
  words.reserve(chains.size());
  for (const auto& c : chains) {
    std::vector<int> w;
    for (auto it = c.labels.rbegin(); it != c.labels.rend(); ++it) w.push_back(rank(*it));
    words.push_back(std::move(w));
  }
  auto violation = [&](const std::string& what, std::size_t a, std::optional<std::size_t> b = std::nullopt) {
    std::string msg = what + " in [" + P.name(x) + ", " + P.name(y) + "]: " + describe_chain(P, chains[a]);
    if (b) msg += " vs " + describe_chain(P, chains[*b]);
    fail(ErrorCode::ELViolation, msg);
  };

  std::optional<std::size_t> inc, dec;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const auto& w = words[k];
    if (std::adjacent_find(w.begin(), w.end(), std::greater_equal<>()) == w.end()) {
      if (inc) violation("two increasing chains", *inc, k);
      inc = k;
    }
    if (std::adjacent_find(w.begin(), w.end(), std::less_equal<>()) == w.end()) {
      if (dec) violation("two decreasing chains", *dec, k);
      dec = k;
    }
  }
  if (!inc) fail(ErrorCode::ELViolation, "no increasing chain in [" + P.name(x) + ", " + P.name(y) + "]");
  if (!dec) fail(ErrorCode::ELViolation, "no decreasing chain in [" + P.name(x) + ", " + P.name(y) + "]");
  const std::vector<int> inc_down(words[*inc].rbegin(), words[*inc].rend());
  for (std::size_t k = 0; k < words.size(); ++k) {
    if (k != *inc) {
      if (words[k] == words[*inc]) violation("distinct chains with equal label words", *inc, k);
      if (words[k] < words[*inc]) violation("increasing chain is not lexicographically least", *inc, k);
      const std::vector<int> down(words[k].rbegin(), words[k].rend());
      if (down > inc_down) violation("increasing chain read downwards is not lexicographically largest", *inc, k);
    }
    if (k != *dec && words[k] > words[*dec]) violation("decreasing chain is not lexicographically largest", *dec, k);
  }
  report.increasing_lex_minimal = true;
  report.decreasing_lex_maximal = true;
  report.increasing_dual_maximal = true;
  report.increasing = chains[*inc];
  report.decreasing = chains[*dec];

  const Bits inside = P.above(x) & P.below(y);
  report.atom_minimal = true;
  report.coatom_maximal = true;
  if (x != y) {
    const auto& w = words[*inc];
    for (auto k : P.up_edges(x)) {
      const auto& e = P.covers()[k];
      if (inside.test(e.hi) && rank(e.label) < w.front()) report.atom_minimal = false;
    }
    for (auto k : P.down_edges(y)) {
      const auto& e = P.covers()[k];
      if (inside.test(e.lo) && rank(e.label) > w.back()) report.coatom_maximal = false;
    }
    if (!report.atom_minimal) violation("increasing chain does not start with the least atom label", *inc);
    if (!report.coatom_maximal) violation("increasing chain does not end with the largest coatom label", *inc);
  }
  return report;
}

long euler_characteristic(const FinitePoset& P) {
  long chi = 0;
  for (auto d : P.dims()) chi += (d % 2 == 0) ? 1 : -1;
  return chi;
}

}  // namespace coxmorse
