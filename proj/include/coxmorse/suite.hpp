#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coxmorse/reflection_order.hpp"

namespace coxmorse {

enum class SuiteLevel { Quick, Full };

/// "quick" or "full"; anything else is a Usage error.
SuiteLevel parse_level(const std::string& text);

struct SuiteConfig {
  SuiteLevel level = SuiteLevel::Full;
  unsigned jobs = 1;
  std::uint64_t seed = 20240601;
  std::vector<int> only;  // criterion ids; empty = all
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t instances = 0;
  std::size_t violations = 0;
  std::string detail;      // counts, or the first violation
  double seconds = 0;
  double limit_seconds = 0;  // 0 = no limit
};

inline constexpr int kCriterionCount = 10;

CriterionResult run_criterion(int id, const SuiteConfig& config);

/// Runs the selected criteria in id order, reporting each as it finishes.
std::vector<CriterionResult> run_suite(const SuiteConfig& config,
                                       const std::function<void(const CriterionResult&)>& on_result = {});

/// Distinct orders from uniformly random descent walks down from w0.
std::vector<ReflectionOrder> sampled_orders(const CoxeterSystem& W, std::size_t count, std::uint64_t seed);

/// Calls fn(i) for i in [0, n) on up to `jobs` threads. The first exception is rethrown.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn);

std::string format_result(const CriterionResult& r);

}  // namespace coxmorse
