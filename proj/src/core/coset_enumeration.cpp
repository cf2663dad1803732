#include "coset_enumeration.hpp"

#include <array>
#include <string>
#include <utility>

#include "coxmorse/error.hpp"

namespace coxmorse::detail {

namespace {

constexpr std::int32_t kUndefined = -1;

class Enumerator {
 public:
  Enumerator(const CoxeterMatrix& matrix, std::size_t max_cosets)
      : rank_(matrix.rank()), max_cosets_(max_cosets), relators_by_start_(rank_) {
    for (int s = 0; s < rank_; ++s) {
      for (int t = 0; t < rank_; ++t) {
        if (s == t) continue;
        std::vector<int> word;
        for (int k = 0; k < matrix(s, t); ++k) {
          word.push_back(s);
          word.push_back(t);
        }
        relators_by_start_[s].push_back(word);
        relators_.push_back(std::move(word));
      }
    }
    new_coset();
  }

  void run() {
    for (;;) {
      for (std::size_t c = 0; c < parent_.size(); ++c) {
        for (int s = 0; s < rank_; ++s) {
          if (!live(c)) break;
          if (entry(c, s) != kUndefined) continue;
          const auto d = new_coset();
          set(static_cast<std::int32_t>(c), s, d);
          deductions_.emplace_back(static_cast<std::int32_t>(c), s);
          process_deductions();
        }
      }
      if (!lookahead()) break;
    }
  }

  CayleyTable compact() {
    std::vector<std::int32_t> renumber(parent_.size(), kUndefined);
    std::size_t next = 0;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (live(c)) renumber[c] = static_cast<std::int32_t>(next++);
    }
    CayleyTable out;
    out.rank = rank_;
    out.size = next;
    out.table.resize(next * rank_);
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      if (!live(c)) continue;
      for (int s = 0; s < rank_; ++s) {
        const auto target = rep(entry(c, s));
        out.table[renumber[c] * rank_ + s] = static_cast<std::uint32_t>(renumber[target]);
      }
    }
    return out;
  }

  std::size_t live_count() const { return live_; }

 private:
  std::int32_t& entry(std::size_t c, int s) { return table_[c * rank_ + s]; }
  bool live(std::size_t c) const { return parent_[c] == static_cast<std::int32_t>(c); }

  std::int32_t new_coset() {
    if (parent_.size() >= max_cosets_) {
      fail(ErrorCode::GroupTooLarge,
           "coset enumeration exceeded " + std::to_string(max_cosets_) + " cosets (group too large or infinite)");
    }
    const auto c = static_cast<std::int32_t>(parent_.size());
    parent_.push_back(c);
    table_.resize(table_.size() + rank_, kUndefined);
    ++live_;
    return c;
  }

  void set(std::int32_t c, int s, std::int32_t d) {
    entry(c, s) = d;
    entry(d, s) = c;
  }

  std::int32_t rep(std::int32_t c) {
    auto root = c;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[c] != root) {
      const auto next = parent_[c];
      parent_[c] = root;
      c = next;
    }
    return root;
  }

  void merge(std::int32_t a, std::int32_t b, std::vector<std::int32_t>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent_[b] = a;
    queue.push_back(b);
    --live_;
  }

  void coincidence(std::int32_t a, std::int32_t b) {
    std::vector<std::int32_t> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto dead = queue[q];
      for (int s = 0; s < rank_; ++s) {
        const auto target = entry(dead, s);
        if (target == kUndefined) continue;
        if (entry(target, s) == dead) entry(target, s) = kUndefined;
        const auto e1 = rep(dead);
        const auto f1 = rep(target);
        if (entry(e1, s) != kUndefined) {
          merge(f1, entry(e1, s), queue);
        } else if (entry(f1, s) != kUndefined) {
          merge(e1, entry(f1, s), queue);
        } else {
          set(e1, s, f1);
          deductions_.emplace_back(e1, s);
        }
      }
    }
  }

  // Returns true if the scan changed the table.
  bool scan(std::int32_t c, const std::vector<int>& word) {
    const int length = static_cast<int>(word.size());
    std::int32_t f = c;
    int i = 0;
    while (i < length && entry(f, word[i]) != kUndefined) f = entry(f, word[i++]);
    if (i == length) {
      if (f != c) {
        coincidence(f, c);
        return true;
      }
      return false;
    }
    std::int32_t b = c;
    int j = length - 1;
    while (j >= i && entry(b, word[j]) != kUndefined) b = entry(b, word[j--]);
    if (j < i) {
      coincidence(f, b);
      return true;
    }
    if (j == i) {
      set(f, word[i], b);
      deductions_.emplace_back(f, word[i]);
      return true;
    }
    return false;
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [c, s] = deductions_.back();
      deductions_.pop_back();
      if (!live(c)) continue;
      for (const auto& word : relators_by_start_[s]) {
        if (!live(c)) break;
        scan(c, word);
      }
      const auto d = entry(c, s);
      if (d == kUndefined || !live(d)) continue;
      for (const auto& word : relators_by_start_[s]) {
        if (!live(d)) break;
        scan(d, word);
      }
    }
  }

  // Full relator pass over every live coset; true if anything changed or the
  // table is still incomplete.
  bool lookahead() {
    bool changed = false;
    for (std::size_t c = 0; c < parent_.size(); ++c) {
      for (const auto& word : relators_) {
        if (!live(c)) break;
        if (scan(static_cast<std::int32_t>(c), word)) changed = true;
        process_deductions();
      }
    }
    for (std::size_t c = 0; c < parent_.size() && !changed; ++c) {
      if (!live(c)) continue;
      for (int s = 0; s < rank_; ++s) {
        if (entry(c, s) == kUndefined) changed = true;
      }
    }
    return changed;
  }

  int rank_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;
  std::vector<std::vector<std::vector<int>>> relators_by_start_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::vector<std::pair<std::int32_t, int>> deductions_;
  std::size_t live_ = 0;
};

}  // namespace

CayleyTable enumerate_cosets(const CoxeterMatrix& matrix, std::size_t max_elements, std::size_t max_cosets) {
  Enumerator enumerator(matrix, max_cosets);
  enumerator.run();
  if (enumerator.live_count() > max_elements) {
    fail(ErrorCode::GroupTooLarge, "group has " + std::to_string(enumerator.live_count()) +
                                       " elements, above the bound of " + std::to_string(max_elements));
  }
  return enumerator.compact();
}

}  // namespace coxmorse::detail
