#include <doctest.h>

#include "coxmorse/error.hpp"
#include "coxmorse/matching.hpp"
#include "coxmorse/oracles.hpp"

using namespace coxmorse;

namespace {

struct Golden {
  CoxeterSystem W{CoxeterMatrix::from_type("A3")};
  ReflectionOrder order = order_from_reduced_word(W, {0, 1, 2, 0, 1, 0});
  LabeledInterval I = labeled_interval(W, e("2"), e("2.3.1.2"));
  Matching M = build_matching(I, order);

  Element e(const char* w) const { return parse_element(W, w); }
  Element mate(const char* w) const { return I.members[M.mate(I.index_of(e(w)))]; }
};

}  // namespace

TEST_CASE("golden interval: the five pairs of the worked example") {
  const Golden g;
  CHECK(g.I.size() == 10);
  CHECK(g.M.complete());
  CHECK(g.M.pairs(g.I.poset).size() == 5);
  CHECK(g.mate("2.3.1.2") == g.e("2.1.2"));
  CHECK(g.mate("3.2.3") == g.e("2.3"));
  CHECK(g.mate("3.1.2") == g.e("1.2"));
  CHECK(g.mate("2.1.3") == g.e("2.1"));
  CHECK(g.mate("3.2") == g.e("2"));
  // not a special matching: s3s2s3 is matched down to s2s3, which is not below s2s1s2
  CHECK_FALSE(g.W.bruhat_leq(g.e("2.3"), g.e("2.1.2")));
  CHECK(is_acyclic(g.I.poset, g.M).acyclic);
  const auto s = morse_counts(g.I.poset, g.M);
  CHECK(s.unmatched == 0);
}

TEST_CASE("golden interval: shelling subsets") {
  const Golden g;
  const auto rep = verify_shelling_subsets(g.I, g.order, g.M);
  CHECK(rep.coatom_prefixes == 3);
  CHECK(rep.atom_prefixes == 3);
  CHECK(rep.top_complement);
}

TEST_CASE("edge labels are reflections lo * hi^-1") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto I = labeled_interval(W, W.identity(), W.longest());
  for (const auto& c : I.poset.covers()) {
    const auto lo = I.members[c.lo], hi = I.members[c.hi];
    CHECK(I.label(c) == W.multiply(lo, W.inverse(hi)));
    CHECK(W.is_reflection(I.label(c)));
  }
}

TEST_CASE("label products telescope along maximal chains") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto v = parse_element(W, "1"), w = parse_element(W, "1.2.3.2.1");
  const auto I = labeled_interval(W, v, w);
  const auto chains = all_maximal_chains(I.poset, I.index_of(v), I.index_of(w));
  REQUIRE(!chains.empty());
  for (const auto& ch : chains) {
    // labels[k] belongs to elements[k+1] <. elements[k]; bottom-up means back to front
    auto product = W.identity();
    for (auto it = ch.labels.rbegin(); it != ch.labels.rend(); ++it) {
      product = W.multiply(product, W.element(static_cast<ElementId>(*it)));
    }
    CHECK(product == W.multiply(v, W.inverse(w)));
  }
}

TEST_CASE("small intervals") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto order = order_from_reduced_word(W, {0, 1, 0});
  const auto rank_one = labeled_interval(W, parse_element(W, "1"), parse_element(W, "1.2"));
  const auto M1 = build_matching(rank_one, order);
  CHECK(M1.pairs(rank_one.poset).size() == 1);
  CHECK(is_acyclic(rank_one.poset, M1).acyclic);

  const auto full = labeled_interval(W, W.identity(), W.longest());
  const auto M = build_matching(full, order);
  CHECK(M.pairs(full.poset).size() == 3);
  CHECK(is_acyclic(full.poset, M).acyclic);
  CHECK(oracle::acyclic(full.poset, M));
  const auto named = named_pairs(full.poset, M);
  CHECK(named.front() == std::make_pair(std::string("e"), std::string("2")));

  const auto point = labeled_interval(W, W.identity(), W.identity());
  CHECK_THROWS_AS(build_matching(point, order), Error);
  CHECK_THROWS_AS(labeled_interval(W, parse_element(W, "1"), parse_element(W, "2")), Error);
}

TEST_CASE("equal labels at an element are reported") {
  const auto P = FinitePoset::from_covers({"0", "a", "b"}, {0, 1, 1}, {{0, 1, 4}, {0, 2, 4}});
  try {
    max_label_matching(P, [](Label l) { return static_cast<int>(l); });
    FAIL("expected NotAMatching");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotAMatching);
  }
}

TEST_CASE("every interval of A3 under every order (quick sweep)") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto orders = oracle::reflection_orders(W);
  std::size_t count = 0;
  for (auto v : W.elements()) {
    for (auto w : W.interval(v, W.longest())) {
      if (v == w) continue;
      const auto I = labeled_interval(W, v, w);
      for (const auto& order : orders) {
        const auto M = build_matching(I, order);
        CHECK(M.complete());
        CHECK(is_acyclic(I.poset, M).acyclic == oracle::acyclic(I.poset, M));
        ++count;
      }
    }
  }
  CHECK(count > 2000);
}
