#include "coxmorse/matching.hpp"

#include <algorithm>
#include <numeric>

#include "coxmorse/error.hpp"

namespace coxmorse {

std::optional<std::size_t> LabeledInterval::find(Element x) const {
  auto it = std::lower_bound(members.begin(), members.end(), x);
  if (it == members.end() || *it != x) return std::nullopt;
  return static_cast<std::size_t>(it - members.begin());
}

std::size_t LabeledInterval::index_of(Element x) const {
  auto k = find(x);
  if (!k) fail(ErrorCode::InvalidElement, format_element(*system, x) + " is not in the interval");
  return *k;
}

LabeledInterval labeled_interval(const CoxeterSystem& W, Element v, Element w) {
  if (!W.bruhat_leq(v, w)) {
    fail(ErrorCode::NotComparable, format_element(W, v) + " is not below " + format_element(W, w));
  }
  LabeledInterval I;
  I.system = &W;
  I.bottom = v;
  I.top = w;
  I.members = W.interval(v, w);
  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<CoverEdge> covers;
  const int base = W.length(v);
  for (std::size_t k = 0; k < I.members.size(); ++k) {
    const auto x = I.members[k];
    names.push_back(format_element(W, x));
    dims.push_back(W.length(x) - base);
    for (const auto& c : W.bruhat_covers_down(x)) {
      if (auto lo = I.find(c.lower)) covers.push_back({*lo, k, static_cast<Label>(c.reflection.id)});
    }
  }
  I.poset = FinitePoset::from_covers(std::move(names), std::move(dims), std::move(covers));
  return I;
}

Matching::Matching(std::vector<std::size_t> mate) : mate_(std::move(mate)) {
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    if (mate_[i] >= mate_.size() || mate_[mate_[i]] != i) fail(ErrorCode::NotAMatching, "mate table is not an involution");
  }
}

Matching Matching::unmatched(std::size_t n) {
  std::vector<std::size_t> mate(n);
  std::iota(mate.begin(), mate.end(), 0);
  return Matching(std::move(mate));
}

bool Matching::complete() const {
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    if (mate_[i] == i) return false;
  }
  return true;
}

void Matching::match(std::size_t a, std::size_t b) {
  if (a == b || mate_[a] != a || mate_[b] != b) fail(ErrorCode::NotAMatching, "element already matched");
  mate_[a] = b;
  mate_[b] = a;
}

std::vector<std::pair<std::size_t, std::size_t>> Matching::pairs(const FinitePoset& P) const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    if (mate_[i] != i && P.less(i, mate_[i])) out.emplace_back(i, mate_[i]);
  }
  return out;
}

std::vector<std::size_t> Matching::fixed_points() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    if (mate_[i] == i) out.push_back(i);
  }
  return out;
}

void Matching::validate(const FinitePoset& P) const {
  if (mate_.size() != P.size()) fail(ErrorCode::NotAMatching, "matching and poset differ in size");
  for (std::size_t i = 0; i < mate_.size(); ++i) {
    const auto j = mate_[i];
    if (j == i) continue;
    if (mate_[j] != i) fail(ErrorCode::NotAMatching, "not an involution at " + P.name(i));
    if (!P.covers_pair(i, j) && !P.covers_pair(j, i)) {
      fail(ErrorCode::NotAMatching, P.name(i) + " and " + P.name(j) + " are matched but not a cover");
    }
  }
}

Matching max_label_matching(const FinitePoset& P, const LabelRank& rank) {
  const auto n = P.size();
  if (n == 0) fail(ErrorCode::EmptyInterval, "cannot match an empty poset");
  std::vector<std::size_t> choice(n);
  for (std::size_t x = 0; x < n; ++x) {
    int best = -1;
    std::size_t other = x;
    auto consider = [&](std::size_t edge, std::size_t end) {
      const int r = rank(P.covers()[edge].label);
      if (r == best) fail(ErrorCode::NotAMatching, "two edges at " + P.name(x) + " carry the same label");
      if (r > best) {
        best = r;
        other = end;
      }
    };
    for (auto k : P.up_edges(x)) consider(k, P.covers()[k].hi);
    for (auto k : P.down_edges(x)) consider(k, P.covers()[k].lo);
    choice[x] = other;
  }
  for (std::size_t x = 0; x < n; ++x) {
    const auto y = choice[x];
    if (y == x) continue;
    if (choice[y] != x) {
      fail(ErrorCode::NotAMatching, "the maximal edge at " + P.name(x) + " leads to " + P.name(y) +
                                        ", whose maximal edge leads to " + P.name(choice[y]));
    }
  }
  return Matching(std::move(choice));
}

Matching build_matching(const LabeledInterval& interval, const ReflectionOrder& order) {
  if (interval.size() < 2) fail(ErrorCode::EmptyInterval, "the interval has length 0");
  auto M = max_label_matching(interval.poset, order.label_rank());
  if (!M.complete()) fail(ErrorCode::NotAMatching, "the matching leaves an element unmatched");
  return M;
}

AcyclicityReport is_acyclic(const FinitePoset& P, const Matching& M) {
  const auto n = P.size();
  std::vector<std::vector<std::size_t>> out(n);
  for (const auto& e : P.covers()) {
    if (M.mate(e.lo) == e.hi) {
      out[e.lo].push_back(e.hi);
    } else {
      out[e.hi].push_back(e.lo);
    }
  }
  enum : char { White, Grey, Black };
  std::vector<char> colour(n, White);
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // (node, next edge)
  AcyclicityReport report;
  for (std::size_t root = 0; root < n; ++root) {
    if (colour[root] != White) continue;
    stack.assign(1, {root, 0});
    colour[root] = Grey;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next == out[node].size()) {
        colour[node] = Black;
        stack.pop_back();
        continue;
      }
      const auto to = out[node][next++];
      if (colour[to] == White) {
        colour[to] = Grey;
        stack.emplace_back(to, 0);
      } else if (colour[to] == Grey) {
        report.acyclic = false;
        auto it = std::find_if(stack.begin(), stack.end(), [&](const auto& f) { return f.first == to; });
        for (; it != stack.end(); ++it) report.cycle.push_back(it->first);
        report.cycle.push_back(to);
        return report;
      }
    }
  }
  return report;
}

bool is_M_subset(const Matching& M, const boost::dynamic_bitset<>& Q) {
  for (auto i = Q.find_first(); i != boost::dynamic_bitset<>::npos; i = Q.find_next(i)) {
    if (!Q.test(M.mate(i))) return false;
  }
  return true;
}

bool is_M_subset(const Matching& M, const std::vector<std::size_t>& Q) {
  boost::dynamic_bitset<> bits(M.size());
  for (auto i : Q) bits.set(i);
  return is_M_subset(M, bits);
}

MorseSummary morse_counts(const FinitePoset& P, const Matching& M) {
  auto acyclic = is_acyclic(P, M);
  if (!acyclic.acyclic) {
    std::string walk;
    for (auto i : acyclic.cycle) walk += (walk.empty() ? "" : " -> ") + P.name(i);
    fail(ErrorCode::CyclicMatching, "matching has a cycle: " + walk);
  }
  MorseSummary s;
  s.acyclic = true;
  for (std::size_t i = 0; i < P.size(); ++i) {
    auto& c = s.counts[P.dim(i)];
    if (!M.is_matched(i)) {
      ++c;
      ++s.unmatched;
    }
  }
  s.certificate = s.unmatched == 1 && s.counts.count(0) && s.counts.at(0) == 1;
  return s;
}

AugmentedPoset augment_with_bottom(const FinitePoset& P, const Matching& M) {
  const auto n = P.size();
  std::vector<std::string> names{"0^"};
  std::vector<int> dims{-1};
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(P.name(i));
    dims.push_back(P.dim(i));
  }
  std::vector<CoverEdge> covers;
  for (const auto& e : P.covers()) covers.push_back({e.lo + 1, e.hi + 1, e.label});
  const auto minimal = P.minimal_elements();
  for (auto m : minimal) covers.push_back({0, m + 1, kNoLabel});

  std::vector<std::size_t> mate(n + 1);
  mate[0] = 0;
  for (std::size_t i = 0; i < n; ++i) mate[i + 1] = M.mate(i) + 1;
  for (auto m : minimal) {
    if (!M.is_matched(m)) {
      mate[0] = m + 1;
      mate[m + 1] = 0;
      break;
    }
  }
  AugmentedPoset out{FinitePoset::from_covers(std::move(names), std::move(dims), std::move(covers)),
                     Matching(std::move(mate))};
  if (!is_acyclic(out.poset, out.matching).acyclic) {
    fail(ErrorCode::CyclicMatching, "augmented matching has a cycle");
  }
  return out;
}

namespace {

// Members of [x, y] as poset indices of an interval poset.
boost::dynamic_bitset<> sub_interval(const FinitePoset& P, std::size_t x, std::size_t y) {
  return P.above(x) & P.below(y);
}

}  // namespace

ShellingReport verify_shelling_subsets(const LabeledInterval& interval, const ReflectionOrder& order,
                                       const Matching& M) {
  const auto& P = interval.poset;
  const auto& W = *interval.system;
  const auto bottom = interval.index_of(interval.bottom);
  const auto top = interval.index_of(interval.top);
  auto by_label = [&](std::vector<std::size_t> edges) {
    std::sort(edges.begin(), edges.end(), [&](auto a, auto b) {
      return order.rank(interval.label(P.covers()[a])) < order.rank(interval.label(P.covers()[b]));
    });
    return edges;
  };
  auto falsified = [&](const std::string& what) {
    fail(ErrorCode::TheoremFalsified, "shelling subsets of [" + format_element(W, interval.bottom) + ", " +
                                          format_element(W, interval.top) + "]: " + what);
  };

  ShellingReport report;
  const auto coatom_edges = by_label(P.down_edges(top));
  boost::dynamic_bitset<> acc(P.size());
  for (std::size_t k = 0; k < coatom_edges.size(); ++k) {
    if (k > 0) {
      if (!is_M_subset(M, acc)) falsified("union of the first " + std::to_string(k) + " coatom intervals is not an M-subset");
      ++report.coatom_prefixes;
    }
    acc |= sub_interval(P, bottom, P.covers()[coatom_edges[k]].lo);
  }
  boost::dynamic_bitset<> lower(P.size());
  for (std::size_t k = 0; k + 1 < coatom_edges.size(); ++k) lower |= sub_interval(P, bottom, P.covers()[coatom_edges[k]].lo);
  boost::dynamic_bitset<> complement = ~lower;
  const auto mw = M.mate(top);
  if (complement != sub_interval(P, mw, top)) falsified("complement of the lower coatom intervals is not [M(w), w]");
  report.top_complement = true;

  const auto atom_edges = by_label(P.up_edges(bottom));
  acc.reset();
  for (std::size_t k = 0; k < atom_edges.size(); ++k) {
    if (k > 0) {
      if (!is_M_subset(M, acc)) falsified("union of the first " + std::to_string(k) + " atom intervals is not an M-subset");
      ++report.atom_prefixes;
    }
    acc |= sub_interval(P, P.covers()[atom_edges[k]].hi, top);
  }
  return report;
}

std::vector<std::pair<std::string, std::string>> named_pairs(const FinitePoset& P, const Matching& M) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [lo, hi] : M.pairs(P)) out.emplace_back(P.name(lo), P.name(hi));
  return out;
}

}  // namespace coxmorse
