// Acceptance gate: runs the built-in verification suite and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include <cstdio>

#include "splinefan/reference_suite.hpp"

int main() {
  bool ok = true;
  for (const auto& r : splinefan::run_reference_suite()) {
    std::printf("%s: %s\n", r.passed ? "PASS" : "FAIL", r.name.c_str());
    if (!r.passed) {
      std::printf("  %s\n", r.detail.c_str());
      ok = false;
    }
  }
  return ok ? 0 : 1;
}
