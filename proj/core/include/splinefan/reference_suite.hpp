#ifndef SPLINEFAN_REFERENCE_SUITE_HPP
#define SPLINEFAN_REFERENCE_SUITE_HPP

#include <string>
#include <vector>

namespace splinefan {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

// The built-in verification suite: every published dimension count and
// identity the library is expected to reproduce, computed from fixtures
// constructed in-process. All comparisons are exact.
std::vector<CheckResult> run_reference_suite();

}  // namespace splinefan

#endif
