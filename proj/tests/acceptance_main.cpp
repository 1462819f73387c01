// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure.  The same checks back the `skewbrace paper-suite` subcommand.
#include <cstdio>

#include "skewbrace/suite.hpp"

int main() {
  auto results = skewbrace::run_acceptance({});
  int failures = 0;
  for (const auto& c : results) {
    if (c.verdict.pass) {
      std::printf("[PASS] %s  (%.2fs, budget %.0fs)\n", c.name.c_str(), c.ms / 1000.0,
                  c.budget_s);
    } else {
      ++failures;
      std::printf("[FAIL] %s  (%.2fs, budget %.0fs)\n       %s\n", c.name.c_str(),
                  c.ms / 1000.0, c.budget_s, c.verdict.witness.c_str());
    }
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(results.size()) - failures,
              results.size());
  return failures == 0 ? 0 : 1;
}
