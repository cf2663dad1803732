#include <doctest.h>

#include "coxmorse/error.hpp"
#include "coxmorse/oracles.hpp"
#include "coxmorse/springer.hpp"

using namespace coxmorse;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

}  // namespace

TEST_CASE("A1 with J = {1}: unmatched (s, s)") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A1"));
  const auto sp = build_springer_poset(W, GeneratorSet::of({0}), {});
  const auto s = W.generator(0);
  // (e, s) fails since s is a left descent of s but e <= s s = e
  CHECK(sp.cells.pairs == std::vector<CellPair>{{s, s}});
  const auto r = springer_matching(sp);
  CHECK(r.unmatched == CellPair{s, s});
  CHECK(r.morse.certificate);
}

TEST_CASE("A2 with J = J' = {}: every Bruhat pair") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto sp = build_springer_poset(W, {}, {});
  CHECK(sp.cells.size() == 19);
  const auto r = springer_matching(sp);
  CHECK(r.unmatched == CellPair{W.longest(), W.longest()});
  CHECK(r.morse.certificate);
  CHECK(euler_characteristic(sp.cells.poset) == 1);
  const auto scan = oracle::unmatched_scan(sp.cells.poset, r.matching);
  CHECK(scan.fixed == std::vector<std::size_t>{sp.cells.index_of(W.longest(), W.longest())});
  CHECK(oracle::acyclic(sp.cells.poset, r.matching));
}

TEST_CASE("A3 with J = {1}, J' = {3}") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto J = GeneratorSet::of({0}), Jp = GeneratorSet::of({2});
  const auto sp = build_springer_poset(W, J, Jp);
  const auto r = springer_matching(sp);
  const auto top = W.multiply(W.longest(Jp), W.longest());
  CHECK(r.unmatched == CellPair{top, top});
  CHECK(r.morse.certificate);
  CHECK(oracle::acyclic(sp.cells.poset, r.matching));
  for (const auto& [v, w] : sp.cells.pairs) CHECK(in_springer_set(W, J, Jp, v, w));
  for (auto [lo, hi] : r.matching.pairs(sp.cells.poset)) CHECK(sp.cells.poset.covers_pair(lo, hi));
}

TEST_CASE("membership is literal") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto J = GeneratorSet::of({0});
  const auto s1 = W.generator(0), w0 = W.longest();
  CHECK(in_springer_set(W, J, {}, s1, w0) == false);  // s1 w0 = 2.1 is above s1
  CHECK(in_springer_set(W, J, {}, parse_element(W, "1"), parse_element(W, "1.2")));
  CHECK_FALSE(in_springer_set(W, {}, {}, s1, parse_element(W, "2")));
}

TEST_CASE("slices split as P_v and Q_v") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto sp = build_springer_poset(W, GeneratorSet::of({1}), GeneratorSet::of({0}));
  for (auto v : sp.bottoms) {
    const auto s = build_slices(sp, v);
    std::vector<Element> meet;
    std::set_intersection(s.P.begin(), s.P.end(), s.Q.begin(), s.Q.end(), std::back_inserter(meet));
    CHECK(meet == s.Z);
  }
  CHECK(code_of([&] { build_slices(sp, W.generator(0)); }) == ErrorCode::NotMinimalCosetRep);
}

TEST_CASE("intervals inside a parabolic coset") {
  const auto check = [](const char* type) {
    const CoxeterSystem W(CoxeterMatrix::from_type(type));
    for (std::uint32_t bits = 0; bits < (1u << W.rank()); ++bits) {
      const GeneratorSet J(bits);
      for (auto w : W.elements()) {
        for (auto v : W.interval(W.identity(), w)) {
          const auto x = interval_in_parabolic(W, J, v, w);
          CHECK(W.in_parabolic(x, J));
        }
      }
    }
  };
  check("A3");
  check("B3");
}

TEST_CASE("coset pieces") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto J = GeneratorSet::of({0});
  const auto piece = coset_piece(W, J, W.identity(), parse_element(W, "2"));
  CHECK(piece.size() == 2);
  CHECK(code_of([&] { coset_piece(W, J, W.identity(), W.generator(0)); }) == ErrorCode::NotMinimalCosetRep);
}

TEST_CASE("bad subsets") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  CHECK(code_of([&] { build_springer_poset(W, GeneratorSet::of({0}), GeneratorSet::of({0, 1})); }) ==
        ErrorCode::OverlappingSubsets);
  CHECK(code_of([&] { build_springer_poset(W, GeneratorSet::of({4}), {}); }) == ErrorCode::InvalidSubset);
}
