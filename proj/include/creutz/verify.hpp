#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace creutz {

struct VerifyCheck {
  std::string name;
  double max_deviation;
  double tolerance;
  bool passed;
};

struct VerifyOptions {
  std::uint64_t seed = 20240809;
  // Test hook: replace atan2 by the principal single-argument arctangent when
  // computing the rotation angle inside the diagonalization check, which
  // breaks the branch choice and must trip the check.
  bool inject_wrong_branch = false;
};

// Oracle-equivalence suite: eigenvalues, diagonalization residual, per-mode
// echo factor, energy variance, evolution unitarity, exact-zero solutions and
// seeded-noise determinism. Each check reports its maximum deviation.
std::vector<VerifyCheck> run_verification(const VerifyOptions& opt = {});

bool all_passed(const std::vector<VerifyCheck>& checks);

}  // namespace creutz
