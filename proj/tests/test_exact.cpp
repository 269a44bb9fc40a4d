#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pexc/exact.hpp"
#include "pexc/permutation.hpp"

using namespace pexc;

namespace {

// Brute-force cycle census over S_n: counts[fixed_point_free][cycles].
struct Census {
  std::vector<long> by_cycles;
  std::vector<long> derangements_by_cycles;
};

Census census(int n) {
  Census c{std::vector<long>(n + 1, 0), std::vector<long>(n + 1, 0)};
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    const auto d = decompose(Permutation(v));
    const int cycles = d.fixed_point_count + d.long_cycle_count;
    ++c.by_cycles[cycles];
    if (d.fixed_point_count == 0) ++c.derangements_by_cycles[cycles];
  } while (std::next_permutation(v.begin(), v.end()));
  return c;
}

}  // namespace

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(to_string(factorial(30)) == "265252859812191058636308480000000");
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(0, 0) == 1);
}

TEST_CASE("binomial product identity, r <= 20") {
  for (int r = 0; r <= 20; ++r)
    for (int m = 0; m <= r; ++m)
      for (int p = 0; p <= m; ++p)
        CHECK(binomial(r, m) * binomial(m, p) == binomial(r, p) * binomial(r - p, m - p));
}

TEST_CASE("signless Stirling numbers") {
  CHECK(signless_stirling(0, 0) == 1);
  CHECK(signless_stirling(1, 0) == 0);
  CHECK(signless_stirling(5, 0) == 0);
  CHECK(signless_stirling(3, 2) == 3);
  CHECK(signless_stirling(3, 4) == 0);
  CHECK(signless_stirling(4, -1) == 0);
  for (int n = 0; n <= 20; ++n) CHECK(signless_stirling(n, n) == 1);

  SUBCASE("brute-force cycle counts, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      const Census c = census(n);
      for (int k = 0; k <= n; ++k) CHECK(signless_stirling(n, k) == c.by_cycles[k]);
    }
  }
  SUBCASE("row sums are n!") {
    for (int n = 0; n <= 40; ++n) {
      ExactInteger sum = 0;
      for (int k = 0; k <= n; ++k) sum += signless_stirling(n, k);
      CHECK(sum == factorial(n));
    }
  }
  SUBCASE("ascending factorial expansion") {
    for (int x = 1; x <= 6; ++x) {
      for (int n = 0; n <= 12; ++n) {
        ExactInteger rising = 1;
        for (int j = 0; j < n; ++j) rising *= x + j;
        ExactInteger poly = 0;
        ExactInteger power = 1;
        for (int k = 0; k <= n; ++k) {
          poly += signless_stirling(n, k) * power;
          power *= x;
        }
        CHECK(rising == poly);
      }
    }
  }
  SUBCASE("table recurrence") {
    const StirlingTable t(25);
    CHECK(t.max_n() == 25);
    for (int n = 1; n <= 25; ++n)
      for (int k = 1; k <= n; ++k)
        CHECK(t.unsigned_entry(n, k) ==
              t.unsigned_entry(n - 1, k - 1) + (n - 1) * t.unsigned_entry(n - 1, k));
    CHECK(t.unsigned_entry(25, 3) == signless_stirling(25, 3));
    CHECK_THROWS_AS(t.unsigned_entry(26, 1), std::out_of_range);
  }
}

TEST_CASE("signed Stirling numbers") {
  CHECK(signed_stirling(3, 2) == -3);
  CHECK(signed_stirling(4, 4) == 1);
  CHECK(signed_stirling(1, -1) == 0);
  CHECK(signed_stirling(4, 2) == 11);
  CHECK(StirlingTable(5).signed_entry(3, 2) == -3);
}

TEST_CASE("derangements by cycle count") {
  CHECK(derangement_cycles(0, 0) == 1);
  CHECK(derangement_cycles(4, 1) == 6);
  CHECK(derangement_cycles(4, 2) == 3);
  CHECK(derangement_cycles(3, 0) == 0);
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k)
      if (2 * k > n) CHECK(derangement_cycles(n, k) == 0);

  SUBCASE("brute force, n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      const Census c = census(n);
      for (int k = 0; k <= n; ++k) CHECK(derangement_cycles(n, k) == c.derangements_by_cycles[k]);
    }
  }
  SUBCASE("alternating sum agrees with the recurrence table") {
    for (int n = 0; n <= 30; ++n)
      for (int k = 0; k <= n; ++k)
        CHECK(derangement_cycles_alternating(n, k) == derangement_cycles(n, k));
  }
  SUBCASE("totals satisfy D_n = (n-1)(D_{n-1} + D_{n-2})") {
    std::vector<ExactInteger> total(13);
    for (int n = 0; n <= 12; ++n)
      for (int k = 0; k <= n; ++k) total[n] += derangement_cycles(n, k);
    CHECK(total[0] == 1);
    CHECK(total[1] == 0);
    for (int n = 2; n <= 12; ++n) CHECK(total[n] == (n - 1) * (total[n - 1] + total[n - 2]));
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == ExactRatio(1));
  CHECK(to_string(harmonic(1)) == "1/1");
  CHECK(to_string(harmonic(3)) == "11/6");
  CHECK(to_string(harmonic(6)) == "49/20");
  CHECK_THROWS_AS(harmonic(0), std::invalid_argument);
  CHECK(to_string(harmonic_squares(4)) == "205/144");

  ExactRatio direct = 0;
  for (int j = 1; j <= 500; ++j) direct += ExactRatio(1, j);
  CHECK(harmonic(500) == direct);
}

TEST_CASE("rational normalization and text round trip") {
  const ExactRatio a = make_ratio(6, -4);
  CHECK(to_string(a) == "-3/2");
  CHECK(a.get_den() > 0);
  const ExactRatio sum = make_ratio(1, 6) + make_ratio(1, 3);
  CHECK(to_string(sum) == "1/2");
  CHECK(parse_ratio("10/4") == make_ratio(5, 2));
  CHECK(parse_ratio("7") == ExactRatio(7));
  CHECK_THROWS_AS(parse_ratio("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_ratio("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(make_ratio(1, 0), std::invalid_argument);

  // Property: to_string/parse_ratio round-trip on a grid of sums.
  for (int p = -7; p <= 7; ++p)
    for (int q = 1; q <= 9; ++q)
      for (int r = 1; r <= 5; ++r) {
        const ExactRatio x = make_ratio(p, q) + make_ratio(r, q + r);
        CHECK(parse_ratio(to_string(x)) == x);
        CHECK(to_string(parse_ratio(to_string(x))) == to_string(x));
      }
}

TEST_CASE("integer parsing") {
  CHECK(parse_integer("-120") == -120);
  CHECK(parse_integer("+5") == 5);
  CHECK_THROWS_AS(parse_integer(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_integer("12a"), std::invalid_argument);
}
