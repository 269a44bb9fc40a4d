#include <doctest.h>

#include <cmath>

#include "pexc/moments.hpp"

using namespace pexc;

TEST_CASE("exact moments, small n") {
  // Counted from exhaustive distance histograms.
  const std::vector<std::pair<std::string, std::string>> expected{
      {"1/2", "1/4"},         {"3/2", "11/12"},       {"31/12", "167/144"},
      {"221/60", "4679/3600"}, {"287/60", "5051/3600"}, {"823/140", "262699/176400"},
      {"1951/280", "1104571/705600"},
  };
  for (int n = 2; n <= 8; ++n) {
    CHECK(to_string(mean_exact(n)) == expected[n - 2].first);
    CHECK(to_string(variance_exact(n)) == expected[n - 2].second);
  }
  CHECK(mean_exact(1) == 0);
  CHECK_THROWS_AS(variance_exact(1), std::invalid_argument);
  CHECK_THROWS_AS(mean_exact(0), std::invalid_argument);
}

TEST_CASE("closed forms match the rows and the polynomial") {
  for (int n = 2; n <= 30; ++n) {
    const Moments t = moments_from_table(build_table(n, Method::recurrence_i));
    const Moments p = moments_from_polynomial(generating_polynomial(n), n);
    CHECK(t.mean == mean_exact(n));
    CHECK(t.variance == variance_exact(n));
    CHECK(p.mean == t.mean);
    CHECK(p.variance == t.variance);
  }
}

TEST_CASE("distance distribution") {
  const DistanceDistribution d = distance_distribution(build_table(4, Method::explicit_formula));
  CHECK(d.n == 4);
  CHECK(d.probabilities.size() == 5);
  CHECK(d.probabilities[3] == make_ratio(9, 24));
  ExactRatio sum = 0;
  for (const auto& q : d.probabilities) sum += q;
  CHECK(sum == 1);
  CHECK(d.mean == make_ratio(31, 12));
  CHECK(d.variance == make_ratio(167, 144));
}

TEST_CASE("conversions round to nearest") {
  CHECK(to_double(make_ratio(1, 3)) == 1.0 / 3.0);
  CHECK(to_double(make_ratio(-2, 7)) == -2.0 / 7.0);
  CHECK(to_double(mean_exact(8)) == 1951.0 / 280.0);
  CHECK(to_real(make_ratio(1, 4)) == Real("0.25"));
}

TEST_CASE("asymptotic estimates") {
  CHECK(std::abs(static_cast<double>(asymptotic::euler_gamma()) - 0.5772156649015329) < 1e-16);
  const double pi2_6 = M_PI * M_PI / 6;
  CHECK(std::abs(static_cast<double>(asymptotic::mean_estimate(100)) -
                 (100 + std::log(100.0) + 0.5772156649015329 - 4)) < 1e-12);
  CHECK(std::abs(static_cast<double>(asymptotic::variance_estimate(100)) -
                 (std::log(100.0) + 0.5772156649015329 - pi2_6)) < 1e-12);

  const AsymptoticGap g = asymptotic_gap(100);
  CHECK(g.mean_gap <= 3.0 / 100);
  CHECK(g.variance_gap < 0.1);
  CHECK_THROWS_AS(asymptotic_gap(1), std::invalid_argument);

  const auto sweep = asymptotic_gaps(10, 200);
  REQUIRE(sweep.size() == 191);
  for (const auto& s : sweep) {
    const AsymptoticGap e = asymptotic_gap(s.n);
    CHECK(std::abs(s.mean_gap - e.mean_gap) < 1e-14);
    CHECK(std::abs(s.variance_gap - e.variance_gap) < 1e-14);
  }
}

TEST_CASE("characteristic function") {
  CHECK(characteristic_function(50, 0.0) == std::complex<double>(1.0, 0.0));
  for (int i = 0; i < 20; ++i) {
    const double t = -5.0 + 0.5 * i;
    CHECK(std::abs(characteristic_function(2, t) - std::complex<double>(std::cos(t), 0)) < 1e-12);
  }
  // Against the exact row at small n.
  for (int n : {5, 9, 14}) {
    const WhitneyTable row = build_table(n, Method::explicit_formula);
    const double mu = to_double(mean_exact(n));
    const double sigma = std::sqrt(to_double(variance_exact(n)));
    const double nf = to_double(ExactRatio(factorial(n)));
    for (double t : {0.3, 1.0, 2.7}) {
      std::complex<double> direct = 0;
      for (int k = 0; k < static_cast<int>(row.values.size()); ++k)
        direct += to_double(ExactRatio(row.values[k])) / nf * std::polar(1.0, t * (k - mu) / sigma);
      CHECK(std::abs(characteristic_function(n, t) - direct) < 1e-12);
    }
  }
  // |phi| <= 1 and phi(-t) = conj(phi(t)).
  for (double t : {0.5, 1.0, 3.0}) {
    const auto a = characteristic_function(300, t);
    const auto b = characteristic_function(300, -t);
    CHECK(std::abs(a) <= 1.0 + 1e-12);
    CHECK(std::abs(a - std::conj(b)) < 1e-12);
  }
  CHECK_THROWS_AS(characteristic_function(1, 1.0), std::invalid_argument);
}

TEST_CASE("characteristic function regression baseline") {
  const auto phi = characteristic_function(100, 1.0);
  CHECK(phi.real() == doctest::Approx(0.6099920163453).epsilon(1e-11));
  CHECK(phi.imag() == doctest::Approx(-0.0116111635073).epsilon(1e-9));
}

TEST_CASE("normality diagnostic") {
  CHECK(standard_normal_cdf(0) == 0.5);
  CHECK(standard_normal_cdf(1.959963984540054) == doctest::Approx(0.975).epsilon(1e-12));
  const double d50 = normality_diagnostic(build_table(50, Method::recurrence_i));
  CHECK(d50 > 0);
  CHECK(d50 < 0.05);
  CHECK_THROWS_AS(normality_diagnostic(build_table(1, Method::explicit_formula)),
                  std::invalid_argument);
}

TEST_CASE("seeded samples") {
  const NormalizedSample a = sample_distances(100, 2000, 11);
  const NormalizedSample b = sample_distances(100, 2000, 11);
  CHECK(a.values == b.values);
  CHECK(a.count() == 2000);
  CHECK(a.seed == 11);
  CHECK(std::abs(a.mean()) < 0.1);
  CHECK(std::abs(a.variance() - 1) < 0.15);
  CHECK(sample_distances(100, 10, 12).values != sample_distances(100, 10, 11).values);
}
