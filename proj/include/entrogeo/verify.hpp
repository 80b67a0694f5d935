#pragma once

// Self-check suite over the invariants of every module. Each check measures a
// worst-case violation and passes when it does not exceed its tolerance.

#include <functional>
#include <string>
#include <vector>

namespace entrogeo::verify {

struct Check {
  std::string name;  // "<module>.<invariant>"
  double tolerance = 0.0;
  std::function<double()> measure;
};

struct CheckResult {
  std::string name;
  double measured = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  std::string error;  // set when the measurement itself threw
};

std::vector<Check> invariant_checks();

struct VerifyOptions {
  // Substring match on check names; empty runs everything.
  std::string filter;
  // Test hook: the named checks get a negative tolerance and therefore fail.
  std::vector<std::string> inject_breach;
};

std::vector<CheckResult> run_checks(const VerifyOptions& options);

}  // namespace entrogeo::verify
