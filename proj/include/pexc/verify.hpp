#pragma once

#include <optional>
#include <string>
#include <vector>

namespace pexc {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;  // scope on success, first mismatch on failure
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  /// Detail of the first failed check, if any.
  std::optional<std::string> first_failure() const;
};

/// Cross-validation matrix up to max_n:
///  - four-way table agreement (explicit, recurrence_i, recurrence_ii, gf)
///  - BFS histograms and per-permutation distances, n <= min(max_n, 8)
///  - recurrence (iii) on every (n, k) with n + k + 1 <= max_n
///  - row sums and initial values
///  - closed-form moments against table moments and polynomial derivatives
///  - split identities, and BFS class counts for n <= min(max_n, 7)
VerificationReport run_verification(int max_n);

}  // namespace pexc
