#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace pexc {

using ExactInteger = mpz_class;

/// GMP rationals are kept canonical (lowest terms, positive denominator) by
/// every arithmetic operator; make_ratio canonicalizes explicit construction.
using ExactRatio = mpq_class;

ExactRatio make_ratio(const ExactInteger& numerator, const ExactInteger& denominator);

std::string to_string(const ExactInteger& value);

/// Always "p/q", including q = 1.
std::string to_string(const ExactRatio& value);

ExactInteger parse_integer(std::string_view text);

/// Accepts "p/q" or a bare integer. Throws std::invalid_argument on malformed
/// input or a zero denominator.
ExactRatio parse_ratio(std::string_view text);

ExactInteger factorial(int n);

/// Zero for k < 0 or k > n.
ExactInteger binomial(int n, int k);

/// Triangle of signless Stirling numbers of the first kind, rows 0..max_n,
/// built by entry(n,k) = entry(n-1,k-1) + (n-1) entry(n-1,k).
class StirlingTable {
 public:
  explicit StirlingTable(int max_n);

  int max_n() const { return static_cast<int>(rows_.size()) - 1; }

  /// Zero outside 0 <= k <= n. Requires 0 <= n <= max_n().
  const ExactInteger& unsigned_entry(int n, int k) const;

  ExactInteger signed_entry(int n, int k) const;

 private:
  std::vector<std::vector<ExactInteger>> rows_;
};

/// Number of permutations of n elements with exactly k cycles.
ExactInteger signless_stirling(int n, int k);

/// (-1)^(n-k) times signless_stirling(n, k); zero whenever k < 0.
ExactInteger signed_stirling(int n, int k);

/// Fixed-point-free permutations of n elements with exactly k cycles.
///
/// Memoized table from the cycle-insertion recurrence
/// d(n,k) = (n-1) (d(n-1,k) + d(n-2,k-1)); d(0,0) = 1 and d(n,0) = 0 for n >= 1.
ExactInteger derangement_cycles(int n, int k);

/// Same count via the alternating sum  sum_j (-1)^j C(n,j) [n-j, k-j].
ExactInteger derangement_cycles_alternating(int n, int k);

/// H_n = sum_{j=1}^n 1/j, exact. Throws for n < 1.
ExactRatio harmonic(int n);

/// sum_{j=1}^n 1/j^2, exact. Throws for n < 1.
ExactRatio harmonic_squares(int n);

}  // namespace pexc
