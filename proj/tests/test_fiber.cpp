#include <doctest.h>

#include "coxmorse/error.hpp"
#include "coxmorse/fiber.hpp"
#include "coxmorse/oracles.hpp"

using namespace coxmorse;

namespace {

FiberAnchors anchors(const CoxeterSystem& W, const char* vp, const char* wp, const char* v, const char* w) {
  return {parse_element(W, vp), parse_element(W, wp), parse_element(W, v), parse_element(W, w)};
}

}  // namespace

TEST_CASE("equal anchors give the single pair (e, e)") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto K = GeneratorSet::of({0, 1});
  const auto fp = build_fiber_poset(W, K, anchors(W, "2", "2.3", "2", "2.3"));
  CHECK(fp.cells.pairs == std::vector<CellPair>{{W.identity(), W.identity()}});
  const auto r = fiber_matching(fp);
  CHECK(r.unmatched == CellPair{W.identity(), W.identity()});
  CHECK(r.morse.certificate);
  CHECK(oracle::unmatched_scan(fp.cells.poset, r.matching).fixed == std::vector<std::size_t>{0});
}

TEST_CASE("empty K gives a single pair") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto fp = build_fiber_poset(W, {}, anchors(W, "e", "1", "e", "1.2"));
  CHECK(fp.cells.size() == 1);
  CHECK(fiber_matching(fp).morse.certificate);
}

TEST_CASE("A3, K = {1,2}: a fiber with nine cells") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto K = GeneratorSet::of({0, 1});
  const auto fp = build_fiber_poset(W, K, anchors(W, "e", "e", "e", "1.2.3"));
  CHECK(fp.cells.size() == 9);
  CHECK(fp.z == W.identity());
  CHECK(fp.z_prime == parse_element(W, "1.2"));
  const auto r = fiber_matching(fp);
  CHECK(r.quotient.top == parse_element(W, "1.2"));
  CHECK(r.unmatched == CellPair{r.quotient.top, r.quotient.top});
  CHECK(r.morse.certificate);
  CHECK(oracle::acyclic(fp.cells.poset, r.matching));
  verify_convexity(fp);
}

TEST_CASE("cover-restricted description is too large without the length condition") {
  // K = {1}, (v', w') = (s1, s1s2) <= (v, w) = (e, s2s1s3s2): z = e, z' = s1, N_R(s1) = {s1}.
  // (s1, s1) passes the cover-restricted test vacuously, yet l(s1 s1) = 0 != l(s1) + l(s1).
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  const auto K = GeneratorSet::of({0});
  const auto an = anchors(W, "1", "1.2", "e", "2.1.3.2");
  const auto d = fiber_descriptions(W, K, an);
  const auto s1 = W.generator(0);
  CHECK(d.definition == std::vector<CellPair>{{W.identity(), W.identity()}});
  CHECK(d.demazure == d.definition);
  CHECK(d.inversion == d.definition);
  CHECK(std::find(d.cover_inversion.begin(), d.cover_inversion.end(), CellPair{s1, s1}) != d.cover_inversion.end());
  const auto mismatches = compare_descriptions(d);
  REQUIRE(mismatches.size() == 1);
  CHECK(mismatches.front().description == "cover-inversion");
  CHECK(mismatches.front().difference == std::vector<CellPair>{{s1, s1}});
  CHECK(cover_inversion_with_length(W, an, d) == d.definition);
  try {
    build_fiber_poset(W, K, an, FiberCheck::AllDescriptions);
    FAIL("expected PropositionFalsified");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PropositionFalsified);
  }
  const auto fp = build_fiber_poset(W, K, an, FiberCheck::DefinitionOnly);
  CHECK(fiber_matching(fp).morse.certificate);
}

TEST_CASE("Demazure and full inversion descriptions match the definition on A3") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A3"));
  std::size_t instances = 0, cover_mismatches = 0;
  for (std::uint32_t k = 0; k < 8; ++k) {
    const GeneratorSet K(k);
    const auto Q = build_qk(W, K);
    for (std::size_t j = 0; j < Q.pairs.size(); ++j) {
      if (W.length(Q.pairs[j].second) > 4) continue;
      for (std::size_t i = 0; i < Q.pairs.size(); ++i) {
        if (!Q.poset.leq(i, j)) continue;
        const FiberAnchors an{Q.pairs[i].first, Q.pairs[i].second, Q.pairs[j].first, Q.pairs[j].second};
        const auto d = fiber_descriptions(W, K, an);
        CHECK(d.demazure == d.definition);
        CHECK(d.inversion == d.definition);
        CHECK(cover_inversion_with_length(W, an, d) == d.definition);
        cover_mismatches += d.cover_inversion != d.definition;
        ++instances;
      }
    }
  }
  CHECK(instances > 500);
  CHECK(cover_mismatches > 0);
}

TEST_CASE("Q_K relation and anchor errors") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  const auto K = GeneratorSet::of({0});
  const auto Q = build_qk(W, K);
  for (const auto& [v, w] : Q.pairs) {
    CHECK(W.bruhat_leq(v, w));
    CHECK((W.descents(w, Side::Right) & K).empty());
  }
  CHECK_THROWS_AS(build_fiber_poset(W, K, anchors(W, "e", "1", "e", "2")), Error);  // 1 is not in W^K
  try {
    z_lower(W, K, W.identity(), parse_element(W, "2"));
    FAIL("expected AnchorViolation");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AnchorViolation);
  }
}

TEST_CASE("generalized quotient and convexity on a small sweep") {
  const CoxeterSystem W(CoxeterMatrix::from_type("A2"));
  for (std::uint32_t k = 0; k < 4; ++k) {
    const GeneratorSet K(k);
    const auto Q = build_qk(W, K);
    for (std::size_t j = 0; j < Q.pairs.size(); ++j) {
      for (std::size_t i = 0; i < Q.pairs.size(); ++i) {
        if (!Q.poset.leq(i, j)) continue;
        const auto fp = build_fiber_poset(W, K, {Q.pairs[i].first, Q.pairs[i].second, Q.pairs[j].first, Q.pairs[j].second});
        verify_convexity(fp);
        const auto q = generalized_quotient(fp);
        CHECK(std::find(q.members.begin(), q.members.end(), q.top) != q.members.end());
        for (auto a : q.members) CHECK(W.bruhat_leq(a, q.top));
      }
    }
  }
}
