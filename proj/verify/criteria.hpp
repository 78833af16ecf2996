#pragma once

// Runners for the twelve acceptance criteria. Each returns a self-contained
// verdict; the acceptance binary and `check` subcommand only format them.

#include <cstdint>
#include <string>
#include <vector>

namespace szt::verify {

inline constexpr int kCriterionCount = 12;

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::size_t cases = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
  double limit_seconds = 0;  // 0 when no runtime bound applies
};

/// Throws std::out_of_range for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed);

/// Criteria exercising a module; throws std::invalid_argument for unknown
/// module names.
std::vector<int> criteria_for_module(const std::string& module);

/// `[PASS] 3 level sets: 50 cases, 0.41 s`
std::string format_line(const CriterionResult& r);

}  // namespace szt::verify
