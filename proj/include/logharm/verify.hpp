#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace logharm {

struct CheckResult {
  std::string name;
  std::string module;
  double tolerance = 0.0;
  double measured = 0.0;  // worst gap observed (or a count, see detail)
  bool pass = false;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  /// Multiplies every tolerance; values < 1 tighten the suite.
  double tolerance_scale = 1.0;
  /// Substring matched against check name or module; empty runs everything.
  std::string filter;
};

/// Runs every invariant check that matches the filter. Deterministic for a given seed.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace logharm
