#include <doctest.h>

#include <algorithm>

#include "coxmorse/error.hpp"
#include "coxmorse/oracles.hpp"
#include "coxmorse/reflection_order.hpp"
#include "coxmorse/suite.hpp"

using namespace coxmorse;

namespace {

std::vector<Element> elements(const CoxeterSystem& W, std::initializer_list<const char*> words) {
  std::vector<Element> out;
  for (auto w : words) out.push_back(parse_element(W, w));
  return out;
}

}  // namespace

TEST_CASE("inversion sequence of a reduced word") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto order = order_from_reduced_word(W, {0, 1, 0, 2, 1, 0});
  // t_k = s_{i_1} ... s_{i_{k-1}} s_{i_k} s_{i_{k-1}} ... s_{i_1}
  CHECK(order.sequence() == elements(W, {"1", "1.2.1", "2", "1.2.3.2.1", "2.3.2", "3"}));
  CHECK(order.word() == Word{0, 1, 0, 2, 1, 0});
  CHECK(order.rank(parse_element(W, "2")) == 2);
  CHECK(order.precedes(parse_element(W, "1"), parse_element(W, "3")));
  CHECK_THROWS_AS(order.rank(parse_element(W, "1.2")), Error);

  const auto golden = order_from_reduced_word(W, {0, 1, 2, 0, 1, 0});
  CHECK(golden.sequence() == elements(W, {"1", "1.2.1", "1.2.3.2.1", "2", "2.3.2", "3"}));
}

TEST_CASE("words that are not reduced words of w0 are rejected") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  auto code = [&](const Word& w) {
    try {
      order_from_reduced_word(W, w);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Internal;
  };
  CHECK(code({0, 1}) == ErrorCode::NotReducedWordOfW0);
  CHECK(code({0, 0, 1}) == ErrorCode::NotReducedWordOfW0);
  CHECK(code({0, 1, 0, 1}) == ErrorCode::NotReducedWordOfW0);
  CHECK_NOTHROW(order_from_reduced_word(W, {1, 0, 1}));
}

TEST_CASE("constructor requires a permutation of T") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto t = elements(W, {"1", "1", "2"});
  CHECK_THROWS_AS(ReflectionOrder(W, t, {}), Error);
  CHECK_THROWS_AS(ReflectionOrder(W, elements(W, {"1", "2"}), {}), Error);
}

TEST_CASE("dihedral validation") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  CHECK(validate(W, elements(W, {"1", "1.2.1", "2"})).ok);
  CHECK(validate(W, elements(W, {"2", "1.2.1", "1"})).ok);
  const auto bad = validate(W, elements(W, {"1", "2", "1.2.1"}));
  CHECK_FALSE(bad.ok);
  CHECK(bad.violation.has_value());

  // swapping the first two entries of s1, s1s2s1, s2
  CHECK_FALSE(validate(W, elements(W, {"1.2.1", "1", "2"})).ok);

  const CoxeterSystem B(CoxeterMatrix::from_type("B3"));
  for (const auto& order : sampled_orders(B, 5, 7)) CHECK(validate(B, order).ok);
}

TEST_CASE("the validator accepts exactly the inversion sequences") {
  for (const char* type : {"A2", "B2", "A3"}) {
    CAPTURE(type);
    const CoxeterSystem W(CoxeterMatrix::from_type(type));
    auto perm = W.reflections();
    std::size_t accepted = 0;
    do {
      accepted += validate(W, perm).ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(accepted == oracle::reflection_orders(W).size());
  }
}

TEST_CASE("opposite order") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  for (const auto& order : oracle::reflection_orders(W)) {
    const auto op = opposite(W, order);
    auto reversed = order.sequence();
    std::reverse(reversed.begin(), reversed.end());
    CHECK(op.sequence() == reversed);
    CHECK(order_from_reduced_word(W, op.word()).sequence() == reversed);
    CHECK(opposite(W, op) == order);
  }
}

TEST_CASE("Springer order puts W_J' first and W_J last") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto order = order_for_springer(W, GeneratorSet::of({0}), GeneratorSet::of({2}));
  CHECK(order.sequence() == elements(W, {"1", "1.2.1", "2", "1.2.3.2.1", "2.3.2", "3"}));
  CHECK(order.word().size() == 6);
  CHECK_THROWS_AS(order_for_springer(W, GeneratorSet::of({0}), GeneratorSet::of({0, 1})), Error);

  const CoxeterSystem B(CoxeterMatrix::from_type("B3"));
  const auto Jp = GeneratorSet::of({2}), J = GeneratorSet::of({0, 1});
  const auto ob = order_for_springer(B, Jp, J);
  std::vector<Element> in_jp, out_jp, in_j, out_j;
  for (auto t : B.reflections()) {
    (B.in_parabolic(t, Jp) ? in_jp : out_jp).push_back(t);
    (B.in_parabolic(t, J) ? in_j : out_j).push_back(t);
  }
  CHECK(in_jp.size() == 1);
  CHECK(in_j.size() == 3);
  CHECK(precedes_all(ob, in_jp, out_jp));
  CHECK(precedes_all(ob, out_j, in_j));
  CHECK(validate(B, ob).ok);
}

TEST_CASE("fiber order puts N_R(v') first") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  for (auto vp : W.elements()) {
    const auto order = order_for_fiber(W, vp);
    const auto inv = W.right_inversion_reflections(vp);
    std::vector<Element> rest;
    for (auto t : W.reflections()) {
      if (std::find(inv.begin(), inv.end(), t) == inv.end()) rest.push_back(t);
    }
    CHECK(precedes_all(order, inv, rest));
  }
}

TEST_CASE("w0 conjugation of generators") {
  const CoxeterSystem A(CoxeterMatrix::from_type("A3"));
  CHECK(w0_conjugation(A) == std::vector<Generator>{2, 1, 0});
  const CoxeterSystem B(CoxeterMatrix::from_type("B3"));
  CHECK(w0_conjugation(B) == std::vector<Generator>{0, 1, 2});
}

TEST_CASE("sampled orders are distinct and deterministic") {
  const CoxeterSystem H(CoxeterMatrix::from_type("H3"));
  const auto a = sampled_orders(H, 5, 11);
  const auto b = sampled_orders(H, 5, 11);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(a[i] == a[j]);
  }
}
