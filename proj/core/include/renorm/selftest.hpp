#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace renorm {

struct SelfCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SelfCheck> checks;

  bool pass() const;
};

struct SelftestOptions {
  std::uint64_t seed = 7;
  /// Multiplies every sample count; 1.0 is a quick run, 10.0 the full sweep.
  double scale = 1.0;
};

/// Sampled invariant suites for each module, in dependency order:
/// geometry_core, blueprint_norm, renorming, projection.
std::vector<SuiteResult> run_selftest(const SelftestOptions& opts = {});

}  // namespace renorm
