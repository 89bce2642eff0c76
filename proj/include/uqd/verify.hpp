#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace uqd {

struct CheckResult {
  std::string name;
  bool passed;
  double deviation;  // worst observed deviation
  double tolerance;
};

// Cross-checks the reduced-basis engine against the full-space oracle and
// the closed forms for every n in 1..n_max: basis orthonormality, input
// states, projector expectations and traces, success probabilities,
// unambiguity, block structure, eigenvalue pairing and the minimum
// eigenvalue. Stops after the first failing check. ResourceError for
// n_max > 5.
std::vector<CheckResult> run_verification(int n_max, int pairs = 20, std::uint64_t seed = 2024);

}  // namespace uqd
