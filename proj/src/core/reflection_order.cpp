#include "coxmorse/reflection_order.hpp"

#include <algorithm>

#include "coxmorse/error.hpp"

namespace coxmorse {

ReflectionOrder::ReflectionOrder(const CoxeterSystem& W, std::vector<Element> sequence, Word provenance)
    : system_(&W), sequence_(std::move(sequence)), word_(std::move(provenance)) {
  rank_by_index_.assign(W.reflections().size(), -1);
  if (sequence_.size() != W.reflections().size()) {
    fail(ErrorCode::InvalidElement, "a reflection order must list every reflection exactly once");
  }
  for (std::size_t k = 0; k < sequence_.size(); ++k) {
    const int idx = W.reflection_index(sequence_[k]);
    if (idx < 0) fail(ErrorCode::InvalidElement, format_element(W, sequence_[k]) + " is not a reflection");
    if (rank_by_index_[idx] >= 0) fail(ErrorCode::InvalidElement, "reflection listed twice");
    rank_by_index_[idx] = static_cast<int>(k);
  }
}

int ReflectionOrder::rank(Element t) const {
  const int idx = system_->reflection_index(t);
  if (idx < 0) fail(ErrorCode::InvalidElement, format_element(*system_, t) + " is not a reflection");
  return rank_by_index_[idx];
}

LabelRank ReflectionOrder::label_rank() const {
  return [this](Label label) { return rank(system_->element(static_cast<ElementId>(label))); };
}

ReflectionOrder order_from_reduced_word(const CoxeterSystem& W, const Word& word) {
  const auto w0 = W.longest();
  if (static_cast<int>(word.size()) != W.length(w0)) {
    fail(ErrorCode::NotReducedWordOfW0, "word '" + format_word(word) + "' has the wrong length");
  }
  std::vector<Element> sequence;
  sequence.reserve(word.size());
  auto prefix = W.identity();
  for (auto s : word) {
    if (s < 0 || s >= W.rank()) fail(ErrorCode::NotReducedWordOfW0, "generator out of range");
    const auto next = W.right_multiply(prefix, s);
    if (W.length(next) != W.length(prefix) + 1) {
      fail(ErrorCode::NotReducedWordOfW0, "word '" + format_word(word) + "' is not reduced");
    }
    sequence.push_back(W.multiply(next, W.inverse(prefix)));
    prefix = next;
  }
  if (prefix != w0) fail(ErrorCode::NotReducedWordOfW0, "word does not evaluate to w0");
  return ReflectionOrder(W, std::move(sequence), word);
}

std::vector<Generator> w0_conjugation(const CoxeterSystem& W) {
  const auto w0 = W.longest();
  std::vector<Generator> out(W.rank());
  for (int s = 0; s < W.rank(); ++s) {
    const auto c = W.multiply(W.multiply(w0, W.generator(s)), w0);
    const auto& word = W.shortlex_word(c);
    if (word.size() != 1) fail(ErrorCode::Internal, "w0 s w0 is not a generator");
    out[s] = word.front();
  }
  return out;
}

ReflectionOrder opposite(const CoxeterSystem& W, const ReflectionOrder& order) {
  const auto conj = w0_conjugation(W);
  Word word(order.word().rbegin(), order.word().rend());
  for (auto& s : word) s = conj[s];
  auto result = order_from_reduced_word(W, word);
  std::vector<Element> reversed(order.sequence().rbegin(), order.sequence().rend());
  if (result.sequence() != reversed) fail(ErrorCode::Internal, "opposite word does not reverse the order");
  return result;
}

ValidationReport validate(const CoxeterSystem& W, const std::vector<Element>& sequence) {
  ValidationReport report;
  const auto& T = W.reflections();
  if (sequence.size() != T.size()) {
    report.ok = false;
    report.detail = "sequence does not have |T| entries";
    return report;
  }
  std::vector<int> rank(W.size(), -1);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    if (!W.is_reflection(sequence[k]) || rank[sequence[k].id] >= 0) {
      report.ok = false;
      report.detail = "sequence is not a permutation of T";
      return report;
    }
    rank[sequence[k].id] = static_cast<int>(k);
  }

  std::vector<char> in_group(W.size(), 0);
  for (std::size_t i = 0; i < T.size(); ++i) {
    for (std::size_t j = i + 1; j < T.size(); ++j) {
      // Closure of {T[i], T[j]} under multiplication.
      std::vector<Element> group{W.identity()};
      in_group[W.identity().id] = 1;
      for (std::size_t head = 0; head < group.size(); ++head) {
        for (const auto g : {T[i], T[j]}) {
          const auto x = W.multiply(group[head], g);
          if (!in_group[x.id]) {
            in_group[x.id] = 1;
            group.push_back(x);
          }
        }
      }
      std::vector<Element> refl;
      for (const auto x : group) {
        in_group[x.id] = 0;
        if (W.is_reflection(x)) refl.push_back(x);
      }
      std::sort(refl.begin(), refl.end(), [&](Element a, Element b) { return rank[a.id] < rank[b.id]; });
      const auto a = refl.front();
      const auto b = refl.back();
      // The ends must be the canonical generators: no other reflection of the
      // subgroup is a left inversion of them.
      for (const auto end : {a, b}) {
        for (const auto t : refl) {
          if (t != end && W.length(W.multiply(t, end)) < W.length(end)) {
            report.ok = false;
            report.violation = std::array<Element, 3>{a, t, b};
            report.detail = "dihedral subgroup generated by " + format_element(W, T[i]) + " and " + format_element(W, T[j]) +
                            " does not start or end at a canonical generator (" + format_element(W, end) + ")";
            return report;
          }
        }
      }
      const auto ab = W.multiply(a, b);
      auto expected = a;
      for (std::size_t k = 0; k < refl.size(); ++k) {
        if (refl[k] != expected) {
          report.ok = false;
          report.violation = std::array<Element, 3>{a, refl[k], b};
          report.detail = "dihedral subgroup generated by " + format_element(W, T[i]) + " and " +
                          format_element(W, T[j]) + " is not listed end to end at " + format_element(W, refl[k]);
          return report;
        }
        expected = W.multiply(ab, expected);
      }
    }
  }
  return report;
}

ReflectionOrder order_for_springer(const CoxeterSystem& W, GeneratorSet J_prime, GeneratorSet J) {
  if (!J.disjoint(J_prime)) fail(ErrorCode::OverlappingSubsets, "J and J' must be disjoint");
  const auto conj = w0_conjugation(W);
  GeneratorSet J_star;
  for (auto s : J.members()) J_star.insert(conj[s]);
  const auto head = W.longest(J_prime);
  const auto tail = W.longest(J_star);
  const auto middle = W.multiply(W.multiply(head, W.longest()), tail);
  Word word = W.shortlex_word(head);
  const auto& mid = W.shortlex_word(middle);
  word.insert(word.end(), mid.begin(), mid.end());
  const auto& suffix = W.shortlex_word(tail);
  word.insert(word.end(), suffix.begin(), suffix.end());
  return order_from_reduced_word(W, word);
}

ReflectionOrder order_for_fiber(const CoxeterSystem& W, Element v_prime) {
  Word word = W.shortlex_word(W.inverse(v_prime));
  const auto& rest = W.shortlex_word(W.multiply(v_prime, W.longest()));
  word.insert(word.end(), rest.begin(), rest.end());
  return order_from_reduced_word(W, word);
}

bool precedes_all(const ReflectionOrder& order, const std::vector<Element>& first, const std::vector<Element>& second) {
  if (first.empty() || second.empty()) return true;
  int max_first = -1;
  for (auto t : first) max_first = std::max(max_first, order.rank(t));
  int min_second = static_cast<int>(order.size());
  for (auto t : second) min_second = std::min(min_second, order.rank(t));
  return max_first < min_second;
}

}  // namespace coxmorse
