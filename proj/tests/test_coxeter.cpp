#include <doctest.h>

#include <sstream>

#include "coxmorse/coxeter_system.hpp"
#include "coxmorse/error.hpp"

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

TEST_CASE("group orders and reflection counts") {
  const std::pair<const char*, std::pair<std::size_t, std::size_t>> table[] = {
      {"A1", {2, 1}},   {"A2", {6, 3}},   {"A3", {24, 6}},    {"B2", {8, 4}},     {"B3", {48, 9}},
      {"G2", {12, 6}},  {"H3", {120, 15}}, {"D4", {192, 12}}, {"F4", {1152, 24}}, {"I2(7)", {14, 7}},
      {"A4", {120, 10}}, {"C3", {48, 9}}};
  for (const auto& [type, expect] : table) {
    CAPTURE(type);
    const CoxeterSystem W(CoxeterMatrix::from_type(type));
    CHECK(W.size() == expect.first);
    CHECK(W.reflections().size() == expect.second);
    CHECK(W.length(W.longest()) == static_cast<int>(expect.second));
  }
}

TEST_CASE("identity, generators and normal forms") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  CHECK(W.identity().id == 0);
  CHECK(W.length(W.identity()) == 0);
  for (int s = 0; s < 3; ++s) {
    CHECK(W.length(W.generator(s)) == 1);
    CHECK(W.multiply(W.generator(s), W.generator(s)) == W.identity());
  }
  // ids sort by length, then by shortlex word
  for (ElementId k = 1; k < W.size(); ++k) {
    const auto a = W.element(k - 1), b = W.element(k);
    CHECK(std::make_pair(W.length(a), W.shortlex_word(a)) < std::make_pair(W.length(b), W.shortlex_word(b)));
  }
  CHECK(format_element(W, parse_element(W, "3.2.3")) == "2.3.2");
  CHECK(format_element(W, parse_element(W, "2.3.1.2")) == "2.1.3.2");
  CHECK(format_element(W, W.longest()) == "1.2.1.3.2.1");
  CHECK(parse_element(W, "1,1") == W.identity());
  CHECK(parse_element(W, "e") == W.identity());
}

TEST_CASE("inverse and length are compatible with multiplication") {
  const CoxeterSystem W(CoxeterMatrix::from_type("B3"));
  for (auto x : W.elements()) {
    CHECK(W.multiply(x, W.inverse(x)) == W.identity());
    CHECK(W.length(W.inverse(x)) == W.length(x));
    CHECK(W.from_word(W.shortlex_word(x)) == x);
  }
}

TEST_CASE("word and subset syntax is strict") {
  CHECK(parse_word("1.2.1", 3) == Word{0, 1, 0});
  CHECK(parse_word(" 3 , 1 ", 3) == Word{2, 0});
  CHECK(code_of([] { parse_word("4", 3); }) == ErrorCode::Usage);
  CHECK(code_of([] { parse_word("1..2", 3); }) != ErrorCode::Internal);
  CHECK(code_of([] { parse_word("x", 3); }) != ErrorCode::Internal);
  CHECK(parse_subset("{1,3}", 3) == GeneratorSet::of({0, 2}));
  CHECK(parse_subset("{}", 3).empty());
  CHECK(parse_subset("", 3).empty());
  CHECK(format_subset(GeneratorSet::of({0, 2})) == "{1,3}");
  CHECK(code_of([] { parse_subset("{5}", 3); }) != ErrorCode::Internal);
}

TEST_CASE("bad matrices and infinite groups are rejected") {
  CHECK(code_of([] { CoxeterMatrix::from_type("X9"); }) == ErrorCode::InvalidMatrix);
  CHECK(code_of([] { CoxeterMatrix({{1, 3}, {2, 1}}); }) == ErrorCode::InvalidMatrix);
  CHECK(code_of([] { CoxeterMatrix({{1, 1}, {1, 1}}); }) == ErrorCode::InvalidMatrix);
  std::istringstream inf("2\n1 inf\ninf 1\n");
  CHECK(code_of([&] { CoxeterMatrix::parse(inf); }) == ErrorCode::InvalidMatrix);
  const CoxeterMatrix affine({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}});
  CHECK(code_of([&] { CoxeterSystem W(affine, 1000); }) == ErrorCode::GroupTooLarge);
  std::istringstream b3("# comment\n3\n1 3 2\n3 1 4\n2 4 1\n");
  CHECK(CoxeterSystem(CoxeterMatrix::parse(b3)).size() == 48);
}

TEST_CASE("elements of different systems do not mix") {
  const CoxeterSystem W1(CoxeterMatrix::from_type("A2"));
  const CoxeterSystem W2(CoxeterMatrix::from_type("A2"));
  CHECK(code_of([&] { W1.length(W2.generator(0)); }) == ErrorCode::MixedSystems);
}

TEST_CASE("Bruhat order basics") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto e = W.identity();
  for (auto w : W.elements()) {
    CHECK(W.bruhat_leq(e, w));
    CHECK(W.bruhat_leq(w, W.longest()));
    for (const auto& c : W.bruhat_covers_down(w)) {
      CHECK(W.length(c.lower) + 1 == W.length(w));
      CHECK(W.multiply(c.reflection, w) == c.lower);
      CHECK(W.is_reflection(c.reflection));
    }
  }
  CHECK_FALSE(W.bruhat_leq(W.generator(0), W.generator(1)));
  CHECK(W.interval(e, W.longest()).size() == 24);
  CHECK(W.interval(W.generator(0), W.generator(1)).empty());
}

TEST_CASE("covers are strict relations in D4") {
  const CoxeterSystem W(CoxeterMatrix::from_type("D4"));
  std::size_t count = 0;
  for (auto w : W.elements()) {
    for (auto c : W.bruhat_covers_down(w)) {
      CHECK(W.bruhat_less(c.lower, w));
      ++count;
    }
  }
  CHECK(count > 0);
}

TEST_CASE("descents, inversions and coset representatives") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto x = parse_element(W, "1.2");
  CHECK(W.descents(x, Side::Right) == GeneratorSet::of({1}));
  CHECK(W.descents(x, Side::Left) == GeneratorSet::of({0}));
  CHECK(W.right_inversion_reflections(x).size() == 2);
  CHECK(W.left_inversion_reflections(x).size() == 2);
  const auto J = GeneratorSet::of({0, 1});
  const auto& P = W.parabolic(J);
  CHECK(P.members.size() == 6);
  CHECK(P.left_reps.size() == 4);
  CHECK(P.right_reps.size() == 4);
  CHECK(P.longest == parse_element(W, "1.2.1"));
  for (auto w : W.elements()) {
    const auto r = W.min_rep_right(w, J);
    CHECK((W.descents(r, Side::Right) & J).empty());
    CHECK(W.in_parabolic(W.multiply(W.inverse(r), w), J));
    const auto l = W.min_rep_left(w, J);
    CHECK((W.descents(l, Side::Left) & J).empty());
  }
}

TEST_CASE("Demazure products on generators") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto s1 = W.generator(0), s2 = W.generator(1), e = W.identity();
  for (auto x : W.elements()) {
    CHECK(W.demazure_star(x, e) == x);
    CHECK(W.circ_r(x, e) == x);
  }
  CHECK(W.demazure_star(s1, s1) == s1);
  CHECK(W.demazure_star(s1, s2) == W.multiply(s1, s2));
  CHECK(W.circ_r(s1, s1) == e);
  CHECK(W.circ_l(s1, s1) == e);
  CHECK(W.circ_l(s1, s2) == s2);
  CHECK(W.circ_r(s1, s2) == s1);
}
