// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Usage: acceptance [seed]

#include "criteria.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

int main(int argc, char** argv) {
  std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  int failed = 0;
  for (int id = 1; id <= szt::verify::kCriterionCount; ++id) {
    auto r = szt::verify::run_criterion(id, seed);
    std::cout << szt::verify::format_line(r) << std::endl;
    if (!r.pass) ++failed;
  }
  std::cout << (szt::verify::kCriterionCount - failed) << "/" << szt::verify::kCriterionCount << " criteria passed"
            << std::endl;
  return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
