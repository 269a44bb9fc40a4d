#include "pexc/moments.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "pexc/distance.hpp"
#include "pexc/permutation.hpp"

namespace pexc {

double to_double(const ExactRatio& value) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value.get_mpq_t(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

Real to_real(const ExactRatio& value) {
  Real r;
  mpfr_set_q(r.backend().data(), value.get_mpq_t(), MPFR_RNDN);
  return r;
}

ExactRatio mean_exact(int n) {
  if (n < 1) throw std::invalid_argument("mean_exact: n must be >= 1");
  return ExactRatio(n - 4) + harmonic(n) + make_ratio(2, n);
}

ExactRatio variance_exact(int n) {
  if (n == 1) {
    throw std::invalid_argument(
        "variance_exact: closed form holds for n >= 2 (the variance for n = 1 is 0)");
  }
  if (n < 1) throw std::invalid_argument("variance_exact: n must be >= 2");
  const ExactInteger nn(n);
  return harmonic(n) + make_ratio(4, nn) - make_ratio(8, nn * nn) - harmonic_squares(n);
}

Moments moments_from_table(const WhitneyTable& table) {
  ExactInteger first = 0;
  ExactInteger second = 0;
  ExactInteger total = 0;
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    const ExactInteger kk(static_cast<unsigned long>(k));
    first += kk * table.values[k];
    second += kk * kk * table.values[k];
    total += table.values[k];
  }
  if (total == 0) throw std::invalid_argument("moments_from_table: empty table");
  Moments m;
  m.mean = make_ratio(first, total);
  m.variance = make_ratio(second, total) - m.mean * m.mean;
  return m;
}

Moments moments_from_polynomial(const DistancePolynomial& polynomial, int n) {
  const ExactRatio one(1);
  const DistancePolynomial d1 = polynomial.derivative();
  const DistancePolynomial d2 = d1.derivative();
  const ExactRatio nf(factorial(n));
  Moments m;
  m.mean = d1.evaluate(one) / nf;
  m.variance = d2.evaluate(one) / nf - m.mean * (m.mean - 1);
  return m;
}

DistanceDistribution distance_distribution(const WhitneyTable& table) {
  DistanceDistribution dist;
  dist.n = table.n;
  const ExactInteger nf = factorial(table.n);
  for (const auto& w : table.values) dist.probabilities.push_back(make_ratio(w, nf));
  const Moments m = moments_from_table(table);
  dist.mean = m.mean;
  dist.variance = m.variance;
  return dist;
}

namespace asymptotic {

Real euler_gamma() { return Real(std::string(kEulerGammaDigits)); }

Real mean_estimate(int n) {
  if (n < 1) throw std::invalid_argument("mean_estimate: n must be >= 1");
  return Real(n) + log(Real(n)) + euler_gamma() - 4;
}

Real variance_estimate(int n) {
  if (n < 1) throw std::invalid_argument("variance_estimate: n must be >= 1");
  const Real pi = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
  return log(Real(n)) + euler_gamma() - pi * pi / 6;
}

}  // namespace asymptotic

AsymptoticGap asymptotic_gap(int n) {
  if (n < 2) throw std::invalid_argument("asymptotic_gap: n must be >= 2");
  AsymptoticGap g;
  g.n = n;
  g.mean_gap = static_cast<double>(abs(to_real(mean_exact(n)) - asymptotic::mean_estimate(n)));
  g.variance_gap =
      static_cast<double>(abs(to_real(variance_exact(n)) - asymptotic::variance_estimate(n)));
  return g;
}

std::vector<AsymptoticGap> asymptotic_gaps(int first, int last) {
  if (first < 2 || last < first) throw std::invalid_argument("asymptotic_gaps: need 2 <= first <= last");
  std::vector<AsymptoticGap> out;
  out.reserve(last - first + 1);
  const Real gamma = asymptotic::euler_gamma();
  const Real pi = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
  const Real zeta2 = pi * pi / 6;
  Real h = 0;
  Real h2 = 0;
  for (int j = 1; j <= last; ++j) {
    const Real rj(j);
    h += 1 / rj;
    h2 += 1 / (rj * rj);
    if (j < first) continue;
    const Real lg = log(rj);
    const Real mean = rj + h - 4 + 2 / rj;
    const Real var = h + 4 / rj - 8 / (rj * rj) - h2;
    AsymptoticGap g;
    g.n = j;
    g.mean_gap = static_cast<double>(abs(mean - (rj + lg + gamma - 4)));
    g.variance_gap = static_cast<double>(abs(var - (lg + gamma - zeta2)));
    out.push_back(g);
  }
  return out;
}

std::complex<double> characteristic_function(int n, double t) {
  if (n < 2) throw std::invalid_argument("characteristic_function: n must be >= 2");
  if (t == 0.0) return {1.0, 0.0};
  const double mu = to_double(mean_exact(n));
  const double sigma = std::sqrt(to_double(variance_exact(n)));
  const std::complex<double> x = std::polar(1.0, t / sigma);
  const std::complex<double> q = 1.0 - x * x;

  std::vector<std::complex<double>> b(n);
  b[0] = 1.0;
  for (int m = 1; m < n; ++m) b[m] = b[m - 1] * q / static_cast<double>(m);

  std::complex<double> a = 1.0;
  std::complex<double> sum = 0.0;
  for (int k = 0; k < n; ++k) {
    if (k > 0) a *= (x + static_cast<double>(k)) / static_cast<double>(k);
    // x^k exp(-i t mu / sigma) folded into one phase.
    sum += std::polar(1.0, t * (k - mu) / sigma) * a * b[n - 1 - k];
  }
  return sum / static_cast<double>(n);
}

double standard_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normality_diagnostic(const WhitneyTable& table) {
  if (table.n < 2) throw std::invalid_argument("normality_diagnostic: n must be >= 2");
  const Moments m = moments_from_table(table);
  const double mu = to_double(m.mean);
  const double sigma = std::sqrt(to_double(m.variance));
  const ExactInteger total = table.total();
  ExactInteger cumulative = 0;
  double worst = 0;
  for (std::size_t k = 0; k < table.values.size(); ++k) {
    cumulative += table.values[k];
    const double cdf = to_double(make_ratio(cumulative, total));
    const double normal = standard_normal_cdf((static_cast<double>(k) + 0.5 - mu) / sigma);
    worst = std::max(worst, std::abs(cdf - normal));
  }
  return worst;
}

double NormalizedSample::mean() const {
  if (values.empty()) return 0;
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double NormalizedSample::variance() const {
  if (values.empty()) return 0;
  const double m = mean();
  double s = 0;
  for (double v : values) s += (v - m) * (v - m);
  return s / static_cast<double>(values.size());
}

NormalizedSample sample_distances(int n, std::size_t count, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("sample_distances: n must be >= 2");
  if (count < 1) throw std::invalid_argument("sample_distances: count must be >= 1");
  const double mu = to_double(mean_exact(n));
  const double sigma = std::sqrt(to_double(variance_exact(n)));
  NormalizedSample out;
  out.n = n;
  out.seed = seed;
  out.values.reserve(count);
  PermutationSampler sampler(seed);
  std::vector<int> image(n);
  for (std::size_t s = 0; s < count; ++s) {
    std::iota(image.begin(), image.end(), 1);
    sampler.shuffle(image);
    out.values.push_back((distance(image) - mu) / sigma);
  }
  return out;
}

}  // namespace pexc
