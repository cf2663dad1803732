#include <doctest.h>

#include <atomic>

#include "coxmorse/error.hpp"
#include "coxmorse/suite.hpp"

using namespace coxmorse;

TEST_CASE("quick level passes every criterion") {
  SuiteConfig c;
  c.level = SuiteLevel::Quick;
  const auto results = run_suite(c);
  REQUIRE(results.size() == kCriterionCount);
  for (const auto& r : results) {
    CAPTURE(format_result(r));
    CHECK(r.passed);
    CHECK(r.instances > 0);
  }
}

TEST_CASE("reports do not depend on the number of workers") {
  SuiteConfig one, four;
  one.level = four.level = SuiteLevel::Quick;
  four.jobs = 4;
  one.only = four.only = {2, 5, 7};
  const auto a = run_suite(one), b = run_suite(four);
  REQUIRE(a.size() == b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    CHECK(a[k].instances == b[k].instances);
    CHECK(a[k].violations == b[k].violations);
  }
}

TEST_CASE("levels and criterion ids are validated") {
  CHECK(parse_level("quick") == SuiteLevel::Quick);
  CHECK(parse_level("full") == SuiteLevel::Full);
  CHECK_THROWS_AS(parse_level("medium"), Error);
  CHECK_THROWS_AS(run_criterion(11, SuiteConfig{}), Error);
}

TEST_CASE("parallel_for visits every index once") {
  std::vector<std::atomic<int>> seen(1000);
  parallel_for(seen.size(), 4, [&](std::size_t i) { ++seen[i]; });
  for (const auto& s : seen) CHECK(s.load() == 1);
  CHECK_THROWS(parallel_for(10, 3, [](std::size_t i) {
    if (i == 5) throw std::runtime_error("boom");
  }));
}
