#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "coxmorse/coxeter_matrix.hpp"

namespace coxmorse {

using ElementId = std::uint32_t;
using Generator = int;   // 0-based
using Word = std::vector<Generator>;

/// Handle to a group element. Only meaningful together with the system that
/// issued it; ids are assigned in shortlex order of normal forms, so id 0 is e.
struct Element {
  ElementId id = 0;
  std::uint32_t system = 0;

  friend bool operator==(Element a, Element b) noexcept { return a.id == b.id && a.system == b.system; }
  friend auto operator<=>(Element a, Element b) noexcept { return a.id <=> b.id; }
};

/// Subset of generators as a bit mask (bit i = generator i).
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t bits) : bits_(bits) {}
  static GeneratorSet of(std::initializer_list<Generator> gens) {
    GeneratorSet s;
    for (auto g : gens) s.insert(g);
    return s;
  }
  static constexpr GeneratorSet all(int rank) {
    return GeneratorSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  constexpr bool contains(Generator g) const { return (bits_ >> g) & 1u; }
  constexpr void insert(Generator g) { bits_ |= 1u << g; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }
  int size() const { return __builtin_popcount(bits_); }
  std::vector<Generator> members() const;

  constexpr bool disjoint(GeneratorSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr bool subset_of(GeneratorSet o) const { return (bits_ & ~o.bits_) == 0; }
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ | b.bits_); }
  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.bits_ & b.bits_); }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

enum class Side { Left, Right };

struct BruhatCover {
  Element lower;       // lower = reflection * upper
  Element reflection;
};

class CoxeterSystem;

/// Cached data for a standard parabolic subgroup W_J.
struct ParabolicSubset {
  GeneratorSet generators;
  std::vector<Element> members;       // W_J, in id order
  Element longest;                    // w_J
  std::vector<Element> left_reps;     // ^J W: no left descent in J
  std::vector<Element> right_reps;    // W^J: no right descent in J
};

/// Fully enumerated finite Coxeter group. Immutable after construction and
/// safe for concurrent read-only use.
class CoxeterSystem {
 public:
  static constexpr std::size_t kDefaultMaxElements = 200'000;

  /// Enumerates the group by coset enumeration over the Coxeter presentation.
  /// Throws GroupTooLarge once more than `max_elements` elements exist (which
  /// is also how infinite groups are rejected).
  explicit CoxeterSystem(CoxeterMatrix matrix, std::size_t max_elements = kDefaultMaxElements);

  CoxeterSystem(const CoxeterSystem&) = delete;
  CoxeterSystem& operator=(const CoxeterSystem&) = delete;

  const CoxeterMatrix& matrix() const noexcept { return matrix_; }
  int rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return length_.size(); }
  std::uint32_t tag() const noexcept { return tag_; }

  Element identity() const { return make(0); }
  Element generator(Generator s) const;
  Element element(ElementId id) const;
  Element longest() const { return make(longest_); }
  std::vector<Element> elements() const;

  // Arithmetic.
  Element multiply(Element x, Element y) const;
  Element right_multiply(Element x, Generator s) const { return make(right_[index(x) * rank_ + s]); }
  Element left_multiply(Generator s, Element x) const { return make(left_[index(x) * rank_ + s]); }
  Element inverse(Element x) const { return make(inverse_[index(x)]); }
  int length(Element x) const { return length_[index(x)]; }
  Element from_word(std::span<const Generator> word) const;

  /// Lexicographically least reduced word (generator-index order).
  const Word& shortlex_word(Element x) const { return words_[index(x)]; }

  // Bruhat order.
  bool bruhat_leq(Element v, Element w) const;
  bool bruhat_less(Element v, Element w) const { return v.id != w.id && bruhat_leq(v, w); }
  const std::vector<BruhatCover>& bruhat_covers_down(Element w) const { return covers_down_[index(w)]; }
  const std::vector<Element>& bruhat_covers_up(Element v) const { return covers_up_[index(v)]; }
  /// Elements of [v, w] in id order (empty if v is not below w).
  std::vector<Element> interval(Element v, Element w) const;

  // Reflections.
  const std::vector<Element>& reflections() const noexcept { return reflections_; }
  bool is_reflection(Element x) const { return reflection_index_[index(x)] >= 0; }
  /// Position of x in reflections(), -1 if x is not a reflection.
  int reflection_index(Element x) const { return reflection_index_[index(x)]; }
  /// N_R(v) = { t in T : l(vt) < l(v) }, in id order.
  std::vector<Element> right_inversion_reflections(Element v) const;
  std::vector<Element> left_inversion_reflections(Element v) const;

  GeneratorSet descents(Element x, Side side) const;
  bool is_right_descent(Element x, Generator s) const { return length(right_multiply(x, s)) < length(x); }
  bool is_left_descent(Generator s, Element x) const { return length(left_multiply(s, x)) < length(x); }

  // Parabolic data.
  const ParabolicSubset& parabolic(GeneratorSet J) const;
  bool in_parabolic(Element x, GeneratorSet J) const;
  /// ^J w: the unique element of W_J w without left descents in J.
  Element min_rep_left(Element w, GeneratorSet J) const;
  /// w^K: the unique element of w W_K without right descents in K.
  Element min_rep_right(Element w, GeneratorSet K) const;
  Element longest(GeneratorSet J) const { return parabolic(J).longest; }

  // Demazure-type products.
  /// x * y: maximum of { x'y' : x' <= x, y' <= y }.
  Element demazure_star(Element x, Element y) const;
  /// x o_l y: minimum of { x'y : x' <= x }.
  Element circ_l(Element x, Element y) const;
  /// x o_r y: minimum of { xy' : y' <= y }.
  Element circ_r(Element x, Element y) const;

  /// Throws MixedSystems if x was issued by another system.
  void check(Element x) const;

 private:
  Element make(ElementId id) const { return Element{id, tag_}; }
  std::size_t index(Element x) const {
    check(x);
    return x.id;
  }

  void enumerate(std::size_t max_elements);
  void build_tables();
  void build_bruhat();
  ParabolicSubset build_parabolic(GeneratorSet J) const;

  CoxeterMatrix matrix_;
  int rank_;
  std::uint32_t tag_;

  std::vector<ElementId> right_;    // id * rank + s -> id
  std::vector<ElementId> left_;
  std::vector<ElementId> inverse_;
  std::vector<int> length_;
  std::vector<Word> words_;
  std::vector<ElementId> product_;  // dense Cayley table for small groups
  ElementId longest_ = 0;

  std::vector<Element> reflections_;
  std::vector<int> reflection_index_;

  std::vector<std::vector<BruhatCover>> covers_down_;
  std::vector<std::vector<Element>> covers_up_;
  std::vector<boost::dynamic_bitset<>> below_;  // below_[w][v] iff v <= w

  mutable std::mutex parabolic_mutex_;
  mutable std::map<std::uint32_t, std::unique_ptr<ParabolicSubset>> parabolic_cache_;
};

/// Shared ownership helper for builders and CLI code.
std::shared_ptr<const CoxeterSystem> build_system(const CoxeterMatrix& matrix,
                                                  std::size_t max_elements = CoxeterSystem::kDefaultMaxElements);

/// Word syntax: generators 1-based, separated by '.' or ',', "e" or "" for the identity.
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& word, char sep = '.');
std::string format_element(const CoxeterSystem& W, Element x, char sep = '.');
Element parse_element(const CoxeterSystem& W, std::string_view text);
/// Subset syntax: "{1,3}" or "1,3"; "{}" or "" for the empty set.
GeneratorSet parse_subset(std::string_view text, int rank);
std::string format_subset(GeneratorSet set);

}  // namespace coxmorse
