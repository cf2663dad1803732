// One PASS/FAIL line per acceptance criterion at full scale.
//   acceptance [--criterion N]... [--jobs N] [--quick]

#include <iostream>

#include <CLI11.hpp>

#include "coxmorse/error.hpp"
#include "coxmorse/suite.hpp"

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria"};
  coxmorse::SuiteConfig config;
  bool quick = false;
  app.add_option("--criterion", config.only, "Only these criteria")->check(CLI::Range(1, coxmorse::kCriterionCount));
  app.add_option("--jobs", config.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--quick", quick, "A2-scale instances only");
  CLI11_PARSE(app, argc, argv);
  config.level = quick ? coxmorse::SuiteLevel::Quick : coxmorse::SuiteLevel::Full;

  bool all = true;
  coxmorse::run_suite(config, [&](const coxmorse::CriterionResult& r) {
    std::cout << coxmorse::format_result(r) << std::endl;
    all = all && r.passed;
  });
  return all ? 0 : 1;
}
