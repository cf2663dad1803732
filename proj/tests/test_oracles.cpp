#include <doctest.h>

#include "coxmorse/error.hpp"
#include "coxmorse/oracles.hpp"

using namespace coxmorse;

TEST_CASE("subword Bruhat oracle") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  for (auto w : W.elements()) {
    CHECK(oracle::bruhat_leq(W, W.identity(), w));
    for (auto v : W.elements()) CHECK(oracle::bruhat_leq(W, v, w) == W.bruhat_leq(v, w));
  }
  const CoxeterSystem A2(CoxeterMatrix::from_type("A2"));
  CHECK_FALSE(oracle::bruhat_leq(A2, A2.generator(0), A2.generator(1)));
}

TEST_CASE("brute-force Demazure products") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto below = oracle::bruhat_table(W);
  const auto s1 = W.generator(0);
  for (auto x : W.elements()) CHECK(oracle::demazure(W, below, x, W.identity(), oracle::DemazureOp::Star) == x);
  CHECK(oracle::demazure(W, below, s1, s1, oracle::DemazureOp::CircR) == W.identity());
  CHECK(oracle::demazure(W, below, s1, s1, oracle::DemazureOp::CircL) == W.identity());
  CHECK(oracle::demazure(W, below, s1, s1, oracle::DemazureOp::Star) == s1);
}

TEST_CASE("reflection order enumeration") {
  const CoxeterSystem A2(CoxeterMatrix::from_type("A2"));
  CHECK(oracle::reflection_orders(A2).size() == 2);
  const CoxeterSystem A3(CoxeterMatrix::from_type("A3"));
  const auto orders = oracle::reflection_orders(A3);
  CHECK(orders.size() == 16);
  for (const auto& o : orders) CHECK(validate(A3, o).ok);
  const CoxeterSystem B3(CoxeterMatrix::from_type("B3"));
  CHECK(oracle::reduced_words_of_w0(B3).size() == 42);
  try {
    oracle::reduced_words_of_w0(A3, 10);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapExceeded);
  }
}

TEST_CASE("unmatched scan and Kahn acyclicity") {
  const auto P = FinitePoset::from_covers({"0", "a", "b", "1"}, {0, 1, 1, 2}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  auto M = Matching::unmatched(4);
  M.match(0, 1);
  M.match(2, 3);
  CHECK(oracle::unmatched_scan(P, M).fixed.empty());
  CHECK(oracle::acyclic(P, M));
  const auto open = oracle::unmatched_scan(P, Matching::unmatched(4));
  CHECK(open.fixed.size() == 4);
  CHECK(open.counts.at(1) == 2);

  const auto bowtie = FinitePoset::from_covers({"0", "a", "b", "c", "d", "1"}, {0, 1, 1, 2, 2, 3},
                                               {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  auto cyc = Matching::unmatched(6);
  cyc.match(1, 3);
  cyc.match(2, 4);
  CHECK_FALSE(oracle::acyclic(bowtie, cyc));
}

TEST_CASE("E6 uses the lifting property and still agrees with subwords") {
  const CoxeterSystem W(CoxeterMatrix::from_type("E6"));
  REQUIRE(W.size() == 51840);
  CHECK(W.reflections().size() == 36);
  std::size_t n = 0;
  for (ElementId i = 0; i < W.size(); i += 997) {
    for (ElementId j = 0; j < W.size(); j += 1499) {
      const auto v = W.element(i), w = W.element(j);
      if (W.length(w) > 12) continue;
      CHECK(W.bruhat_leq(v, w) == oracle::bruhat_leq(W, v, w));
      ++n;
    }
  }
  CHECK(n > 100);
}
