// Acceptance suite: runs every criterion of the verification list once and
// prints one pass/fail line per criterion. Exits non-zero if any fail.

#include <cstdio>

#include "wordrep/verify.hpp"

int main() {
  auto results = wordrep::run_verification("all");
  int passed = 0;
  for (const auto& r : results) {
    std::printf("[%2d/15] %s  %-72s %10.1f ms  %s\n", r.criterion, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.millis, r.detail.c_str());
    if (r.pass) ++passed;
  }
  std::printf("acceptance: %d/%zu criteria passed\n", passed, results.size());
  return passed == static_cast<int>(results.size()) ? 0 : 1;
}
