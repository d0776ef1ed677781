#pragma once

#include <string>
#include <vector>

#include "transonic/radial.hpp"

namespace transonic {

struct CheckResult {
  std::string name;
  bool applicable = true;  // false: skipped as N/A for this flow class
  bool passed = false;
  double measure = 0.0;    // worst residual or smallest margin seen
  std::string detail;
};

/// Run the invariant suite against a configuration: flux conservation,
/// Bernoulli residuals, H-slope and slope dominance, branch monotonicity,
/// entropy-curve maximum, pressure-route agreement, closed-form cross-check
/// (gamma = 3 only), shock and jump residuals, obstacle ordering, derivative
/// consistency, saddle structure, second-variation positivity. Checks that
/// need an interior shock are reported as not applicable on configurations
/// without one.
std::vector<CheckResult> run_verification(const ModelConfig& config, std::size_t sweep_n);

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace transonic
