#pragma once

// Fast invariant suites behind the `selfcheck` CLI subcommand.

#include <string>
#include <vector>

namespace csso {

struct CheckResult {
  std::string suite;
  bool pass = false;
  std::string detail;
};

std::vector<CheckResult> run_selfcheck();

}  // namespace csso
