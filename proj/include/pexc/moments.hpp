#pragma once

#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "pexc/exact.hpp"
#include "pexc/whitney.hpp"

namespace pexc {

/// 50 significant decimal digits (about 166 bits), MPFR round-to-nearest.
using Real = boost::multiprecision::mpfr_float_50;

/// Nearest double to an exact rational.
double to_double(const ExactRatio& value);

Real to_real(const ExactRatio& value);

/// mu_n = n + H_n - 4 + 2/n, valid for every n >= 1.
ExactRatio mean_exact(int n);

/// sigma_n^2 = H_n + 4/n - 8/n^2 - sum_{j<=n} 1/j^2. The closed form holds for
/// n >= 2; n = 1 (true variance 0) is rejected.
ExactRatio variance_exact(int n);

struct Moments {
  ExactRatio mean;
  ExactRatio variance;
};

/// Mean and variance by direct moment sums over the row.
Moments moments_from_table(const WhitneyTable& table);

/// Mean W'(1)/n! and variance W''(1)/n! - mu (mu - 1) from the derivatives of
/// the distance polynomial of S_n.
Moments moments_from_polynomial(const DistancePolynomial& polynomial, int n);

/// Exact law of the distance of a uniform random permutation.
struct DistanceDistribution {
  int n = 0;
  std::vector<ExactRatio> probabilities;  // W_{n,k} / n!
  ExactRatio mean;
  ExactRatio variance;
};

DistanceDistribution distance_distribution(const WhitneyTable& table);

namespace asymptotic {

/// Euler-Mascheroni constant, 40 significant digits.
inline constexpr std::string_view kEulerGammaDigits =
    "0.5772156649015328606065120900824024310422";

Real euler_gamma();

/// n + ln n + gamma - 4.
Real mean_estimate(int n);

/// ln n + gamma - pi^2/6.
Real variance_estimate(int n);

}  // namespace asymptotic

struct AsymptoticGap {
  int n = 0;
  double mean_gap = 0;      // |mu_n - mean_estimate(n)|
  double variance_gap = 0;  // |sigma_n^2 - variance_estimate(n)|
};

/// Gaps from the exact mu_n and sigma_n^2. Requires n >= 2.
AsymptoticGap asymptotic_gap(int n);

/// Gaps for every n in [first, last], with H_n and sum 1/j^2 accumulated
/// incrementally in Real precision instead of exactly.
std::vector<AsymptoticGap> asymptotic_gaps(int first, int last);

/// phi_n(t) = E exp(i t D_n), D_n = (distance - mu_n)/sigma_n. Requires n >= 2.
///
/// Evaluated as (1/n) sum_k x^k a_k b_{n-1-k} with x = exp(i t / sigma_n),
/// a_k = prod_{j<=k} (x+j)/j and b_m = (1-x^2)^m / m!, both built by forward
/// products. No coefficient of W_n is formed and nothing is divided by
/// (1 - x^2), so the sum stays O(n) and finite for large n.
std::complex<double> characteristic_function(int n, double t);

/// Standard normal CDF, 0.5 erfc(-x/sqrt 2).
double standard_normal_cdf(double x);

/// sup_k |P(distance <= k) - Phi((k + 1/2 - mu_n)/sigma_n)| over the row,
/// with exact cumulative probabilities. Requires n >= 2.
double normality_diagnostic(const WhitneyTable& table);

struct NormalizedSample {
  int n = 0;
  std::uint64_t seed = 0;
  std::vector<double> values;

  std::size_t count() const { return values.size(); }
  double mean() const;
  /// Population variance (divides by count).
  double variance() const;
};

/// `count` draws of (distance(p) - mu_n)/sigma_n for p = sample_uniform
/// permutations from one PermutationSampler seeded with `seed`.
NormalizedSample sample_distances(int n, std::size_t count, std::uint64_t seed);

}  // namespace pexc
