#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corrgap {

// One verification check. `group` numbers the release-gate families (1-11);
// several checks can share a group. `margin` is the worst slack observed,
// healthy when >= 0 (how far the check stayed from its tolerance).
struct CheckResult {
  int group;
  std::string name;
  bool passed;
  double margin;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 12345;
};

// Full battery: closed-form oracles for the 2- and 3-site rings, the
// inequality chain over parameter grids, Monte-Carlo bound checks and
// structural invariants. Deterministic for a fixed seed.
std::vector<CheckResult> run_verification(const VerifyOptions& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace corrgap
