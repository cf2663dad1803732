#include "coxmorse/oracles.hpp"

#include <algorithm>
#include <set>

#include "coxmorse/error.hpp"

namespace coxmorse::oracle {

using Bits = boost::dynamic_bitset<>;

Bits lower_set(const CoxeterSystem& W, Element w) {
  Bits reached(W.size());
  std::vector<Element> frontier{W.identity()};
  reached.set(W.identity().id);
  for (auto s : W.shortlex_word(w)) {
    const auto count = frontier.size();
    for (std::size_t k = 0; k < count; ++k) {
      const auto x = W.right_multiply(frontier[k], s);
      if (!reached.test(x.id)) {
        reached.set(x.id);
        frontier.push_back(x);
      }
    }
  }
  return reached;
}

bool bruhat_leq(const CoxeterSystem& W, Element v, Element w) { return lower_set(W, w).test(v.id); }

std::vector<Bits> bruhat_table(const CoxeterSystem& W) {
  std::vector<Bits> below;
  below.reserve(W.size());
  for (auto w : W.elements()) below.push_back(lower_set(W, w));
  return below;
}

Element demazure(const CoxeterSystem& W, const std::vector<Bits>& below, Element x, Element y, DemazureOp op) {
  auto members = [&](Element z) {
    std::vector<Element> out;
    for (auto i = below[z.id].find_first(); i != Bits::npos; i = below[z.id].find_next(i)) {
      out.push_back(W.element(static_cast<ElementId>(i)));
    }
    return out;
  };
  std::set<ElementId> candidates;
  switch (op) {
    case DemazureOp::Star:
      for (auto xp : members(x)) {
        for (auto yp : members(y)) candidates.insert(W.multiply(xp, yp).id);
      }
      break;
    case DemazureOp::CircL:
      for (auto xp : members(x)) candidates.insert(W.multiply(xp, y).id);
      break;
    case DemazureOp::CircR:
      for (auto yp : members(y)) candidates.insert(W.multiply(x, yp).id);
      break;
  }
  const bool want_max = op == DemazureOp::Star;
  std::vector<ElementId> optimal;
  for (auto a : candidates) {
    const bool beaten = std::any_of(candidates.begin(), candidates.end(), [&](ElementId b) {
      return a != b && (want_max ? below[b].test(a) : below[a].test(b));
    });
    if (!beaten) optimal.push_back(a);
  }
  if (optimal.size() != 1) {
    fail(ErrorCode::NonUniqueOptimum, std::to_string(optimal.size()) + " optimal elements for " +
                                          format_element(W, x) + " and " + format_element(W, y));
  }
  return W.element(optimal.front());
}

std::vector<Word> reduced_words_of_w0(const CoxeterSystem& W, std::size_t cap) {
  const auto target = W.length(W.longest());
  std::vector<Word> words;
  Word word;
  std::vector<Element> prefix{W.identity()};
  std::vector<Generator> next{0};
  while (!next.empty()) {
    if (static_cast<int>(word.size()) == target) {
      if (words.size() >= cap) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " reduced words");
      words.push_back(word);
      next.pop_back();
      prefix.pop_back();
      word.pop_back();
      continue;
    }
    auto& s = next.back();
    const auto x = prefix.back();
    while (s < W.rank() && W.length(W.right_multiply(x, s)) < W.length(x)) ++s;
    if (s == W.rank()) {
      next.pop_back();
      prefix.pop_back();
      if (!word.empty()) word.pop_back();
      continue;
    }
    prefix.push_back(W.right_multiply(x, s));
    word.push_back(s++);
    next.push_back(0);
  }
  return words;
}

std::vector<ReflectionOrder> reflection_orders(const CoxeterSystem& W, std::size_t cap) {
  std::vector<ReflectionOrder> out;
  std::set<std::vector<ElementId>> seen;
  for (const auto& word : reduced_words_of_w0(W, cap)) {
    std::vector<Element> sequence;
    auto prefix = W.identity();
    for (auto s : word) {
      sequence.push_back(W.multiply(W.multiply(prefix, W.generator(s)), W.inverse(prefix)));
      prefix = W.right_multiply(prefix, s);
    }
    std::vector<ElementId> key;
    for (auto t : sequence) key.push_back(t.id);
    if (seen.insert(key).second) out.emplace_back(W, std::move(sequence), word);
  }
  return out;
}

UnmatchedScan unmatched_scan(const FinitePoset& P, const Matching& M) {
  UnmatchedScan scan;
  const auto& mates = M.mates();
  for (std::size_t i = 0; i < mates.size(); ++i) {
    scan.counts.try_emplace(P.dim(i), 0);
    if (mates[i] == i) {
      scan.fixed.push_back(i);
      ++scan.counts[P.dim(i)];
    }
  }
  return scan;
}

bool acyclic(const FinitePoset& P, const Matching& M) {
  const auto n = P.size();
  std::vector<std::vector<std::size_t>> out(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& e : P.covers()) {
    const bool up = M.mates()[e.lo] == e.hi;
    const auto from = up ? e.lo : e.hi;
    const auto to = up ? e.hi : e.lo;
    out[from].push_back(to);
    ++indegree[to];
  }
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i) {
    if (indegree[i] == 0) ready.push_back(i);
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    const auto x = ready.back();
    ready.pop_back();
    ++removed;
    for (auto y : out[x]) {
      if (--indegree[y] == 0) ready.push_back(y);
    }
  }
  return removed == n;
}

}  // namespace coxmorse::oracle
