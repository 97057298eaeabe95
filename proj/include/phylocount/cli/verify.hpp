#pragma once

#include <string>
#include <vector>

namespace phylocount::cli {

inline const std::vector<std::string> kSuites = {"all",    "genfun", "onecomp", "galled",
                                                  "retvis", "oracle", "appendix"};

/// PASS and FAIL refer to the library's own invariants. MISMATCH marks a
/// printed closed form that disagrees with the exact computation; it is
/// reported with the first difference but does not fail the suite.
struct CheckResult {
  std::string suite;
  std::string name;
  std::string status;
  std::string detail;
};

std::vector<CheckResult> run_suite(const std::string& suite, int threads = 1);

/// True when no check has status FAIL.
bool suite_passed(const std::vector<CheckResult>& results);

}  // namespace phylocount::cli
