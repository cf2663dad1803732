#include <doctest.h>

#include "coxmorse/error.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/poset.hpp"

using namespace coxmorse;

namespace {

// Boolean lattice on two atoms: 0 < a, b < 1.
FinitePoset diamond() {
  return FinitePoset::from_covers({"0", "a", "b", "1"}, {0, 1, 1, 2}, {{0, 1, 0}, {0, 2, 1}, {1, 3, 1}, {2, 3, 0}});
}

// 0 < a, b < c, d < 1 with all four middle covers; matching a-c, b-d cycles.
FinitePoset bowtie() {
  return FinitePoset::from_covers({"0", "a", "b", "c", "d", "1"}, {0, 1, 1, 2, 2, 3},
                                  {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
}

}  // namespace

TEST_CASE("closure and covers") {
  const auto P = diamond();
  CHECK(P.size() == 4);
  CHECK(P.leq(0, 3));
  CHECK_FALSE(P.leq(1, 2));
  CHECK(P.covers().size() == 4);
  CHECK(P.covers_pair(0, 1));
  CHECK_FALSE(P.covers_pair(0, 3));
  CHECK(P.minimal_elements() == std::vector<std::size_t>{0});
  CHECK(P.maximal_elements() == std::vector<std::size_t>{3});
  CHECK(euler_characteristic(P) == 0);
}

TEST_CASE("relations that are not partial orders are rejected") {
  auto cyclic = [] {
    FinitePoset::from_relation({"x", "y"}, {0, 0}, [](std::size_t, std::size_t) { return true; });
  };
  CHECK_THROWS_AS(cyclic(), Error);
  auto not_transitive = [] {
    FinitePoset::from_relation({"x", "y", "z"}, {0, 1, 2},
                               [](std::size_t i, std::size_t j) { return i == j || j == i + 1; });
  };
  CHECK_THROWS_AS(not_transitive(), Error);
  auto implied_edge = [] { FinitePoset::from_covers({"x", "y", "z"}, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}); };
  CHECK_THROWS_AS(implied_edge(), Error);
}

TEST_CASE("from_relation computes the transitive reduction") {
  // divisibility on 1..12
  std::vector<std::string> names;
  std::vector<int> dims;
  for (int k = 1; k <= 12; ++k) {
    names.push_back(std::to_string(k));
    dims.push_back(0);
  }
  const auto P = FinitePoset::from_relation(names, dims, [](std::size_t i, std::size_t j) { return (j + 1) % (i + 1) == 0; });
  CHECK(P.covers_pair(1, 3));   // 2 | 4
  CHECK_FALSE(P.covers_pair(0, 3));
  CHECK(P.covers_pair(3, 11));  // 4 | 12
  CHECK(P.covers_pair(5, 11));  // 6 | 12
  CHECK_FALSE(P.covers_pair(1, 11));
}

TEST_CASE("intervals, purity and thinness") {
  const auto P = bowtie();
  const auto I = interval(P, 1, 5);
  CHECK(I.poset.size() == 4);
  CHECK(I.origin.front() == 1);
  CHECK(is_pure(P));
  CHECK(is_thin(P));
  CHECK(is_thin(diamond()));
  const auto three = FinitePoset::from_covers({"x", "y", "z"}, {0, 1, 2}, {{0, 1}, {1, 2}});
  CHECK_FALSE(is_thin(three));
  CHECK_THROWS_AS(interval(P, 1, 2), Error);
  const auto chain = FinitePoset::from_covers({"x", "y", "z", "w"}, {0, 1, 2, 1}, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  CHECK(is_pure(chain));
  const auto lopsided =
      FinitePoset::from_covers({"x", "y", "z", "w", "u"}, {0, 1, 2, 1, 2}, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {4, 2}});
  CHECK_FALSE(is_pure(lopsided));
  CHECK_THROWS_AS(is_thin(lopsided), Error);
}

TEST_CASE("maximal chains and EL checks on a labeled diamond") {
  const auto P = diamond();
  const auto chains = all_maximal_chains(P, 0, 3);
  CHECK(chains.size() == 2);
  const LabelRank rank = [](Label l) { return static_cast<int>(l); };
  const auto rep = check_el_labeling(P, rank, 0, 3);
  CHECK(rep.chain_count == 2);
  CHECK(rep.increasing.elements == std::vector<std::size_t>{3, 1, 0});
  CHECK(rep.decreasing.elements == std::vector<std::size_t>{3, 2, 0});
  CHECK(rep.increasing_lex_minimal);
  CHECK(rep.decreasing_lex_maximal);
  CHECK(rep.atom_minimal);
  CHECK(rep.coatom_maximal);
  // both chains increasing under equal labels
  const auto flat = FinitePoset::from_covers({"0", "a", "b", "1"}, {0, 1, 1, 2}, {{0, 1, 0}, {0, 2, 0}, {1, 3, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(check_el_labeling(flat, rank, 0, 3), Error);
  CHECK_THROWS_AS(all_maximal_chains(P, 0, 3, 1), Error);
}

TEST_CASE("bowtie matching is cyclic and the witness is a cycle") {
  const auto P = bowtie();
  auto M = Matching::unmatched(P.size());
  M.match(1, 3);
  M.match(2, 4);
  M.validate(P);
  const auto report = is_acyclic(P, M);
  REQUIRE_FALSE(report.acyclic);
  REQUIRE(report.cycle.size() >= 3);
  CHECK(report.cycle.front() == report.cycle.back());
  for (std::size_t k = 0; k + 1 < report.cycle.size(); ++k) {
    const auto a = report.cycle[k], b = report.cycle[k + 1];
    // up along matched edges, down along the others
    if (M.mate(a) == b) {
      CHECK(P.covers_pair(a, b));
    } else {
      CHECK(P.covers_pair(b, a));
    }
  }
  CHECK_THROWS_AS(morse_counts(P, M), Error);
  // one matched edge alone is fine
  auto single = Matching::unmatched(P.size());
  single.match(1, 3);
  CHECK(is_acyclic(P, single).acyclic);
}

TEST_CASE("matchings must be involutions along covers") {
  const auto P = diamond();
  CHECK_THROWS_AS(Matching({1, 2, 0, 3}), Error);
  auto M = Matching::unmatched(4);
  M.match(0, 3);
  CHECK_THROWS_AS(M.validate(P), Error);
  CHECK_THROWS_AS(M.match(0, 1), Error);
}

TEST_CASE("M-subsets and Morse counts") {
  const auto P = diamond();
  auto M = Matching::unmatched(4);
  M.match(0, 1);
  CHECK(is_M_subset(M, std::vector<std::size_t>{0, 1}));
  CHECK(is_M_subset(M, std::vector<std::size_t>{2, 3}));
  CHECK_FALSE(is_M_subset(M, std::vector<std::size_t>{0, 2}));
  const auto s = morse_counts(P, M);
  CHECK(s.acyclic);
  CHECK(s.unmatched == 2);
  CHECK(s.counts.at(1) == 1);
  CHECK(s.counts.at(2) == 1);
  CHECK_FALSE(s.certificate);
}

TEST_CASE("augmenting with a bottom element") {
  // a single point: the added bottom must pair with it
  const auto point = FinitePoset::from_covers({"p"}, {0}, {});
  const auto aug = augment_with_bottom(point, Matching::unmatched(1));
  CHECK(aug.poset.size() == 2);
  CHECK(aug.poset.dim(0) == -1);
  CHECK(aug.matching.complete());
  // two minimal elements, both unmatched: the one of least index is used
  const auto two = FinitePoset::from_covers({"p", "q"}, {0, 0}, {});
  const auto aug2 = augment_with_bottom(two, Matching::unmatched(2));
  CHECK(aug2.matching.mate(0) == 1);
  CHECK_FALSE(aug2.matching.is_matched(2));
}
