#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "zalcman/types.hpp"

namespace zalcman {

struct SuiteResult {
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  bool passed = true;
  long cases = 0;
  std::string detail;  // offending tuple on failure
};

struct SelfcheckReport {
  std::vector<SuiteResult> suites;
  bool ok() const;
};

struct SelfcheckOptions {
  /// A_n implementation under test; swapped out by fault-injection tests.
  std::function<double(Alpha, int)> an;
  std::uint64_t seed = 20240601;
  unsigned threads = 0;
};

/// Runs the invariant suites at small scale, in this order: recurrence-vs-gamma,
/// monotonicity, unified-vs-cases, rotation-invariance, root-transform-identity,
/// extremal-attainment.
SelfcheckReport run_selfcheck(const SelfcheckOptions& opts = {});

}  // namespace zalcman
