#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "pexc/bfs.hpp"
#include "pexc/distance.hpp"

using namespace pexc;

TEST_CASE("rank and unrank") {
  const std::vector<int> id{1, 2, 3, 4};
  CHECK(rank_permutation(id) == 0);
  const std::vector<int> last{4, 3, 2, 1};
  CHECK(rank_permutation(last) == 23);

  for (int n = 1; n <= 7; ++n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::uint64_t expected = 0;
    do {
      CHECK(rank_permutation(v) == expected);  // Lehmer rank is lexicographic
      CHECK(unrank_permutation(n, expected) == Permutation(v));
      ++expected;
    } while (std::next_permutation(v.begin(), v.end()));
  }
}

TEST_CASE("atlas of small groups") {
  const DistanceAtlas a1 = bfs_atlas(1);
  CHECK(a1.size() == 1);
  CHECK(a1.max_distance() == 0);

  const DistanceAtlas a4 = bfs_atlas(4);
  CHECK(a4.size() == 24);
  CHECK(a4.histogram() == std::vector<std::uint64_t>{1, 3, 6, 9, 5});
  CHECK(a4.distance_of(parse_permutation("4 3 2 1")) == distance(parse_permutation("4 3 2 1")));
  const WhitneyTable t = a4.histogram_table();
  CHECK(t.method == Method::bfs);
  CHECK(t.total() == 24);
  CHECK(a4.distance_of(Permutation::identity(4)) == 0);
  CHECK_THROWS(a4.distance_of(Permutation::identity(5)));
}

TEST_CASE("atlas diameters, n <= 8") {
  for (int n = 1; n <= 8; ++n) {
    const DistanceAtlas a = bfs_atlas(n);
    CHECK(a.max_distance() == diameter(n));
    std::uint64_t sum = 0;
    for (auto c : a.histogram()) sum += c;
    CHECK(sum == a.size());
    CHECK(std::none_of(a.distances().begin(), a.distances().end(),
                       [](std::uint8_t d) { return d == 0xFF; }));
  }
}

TEST_CASE("atlas size limits") {
  CHECK_THROWS_AS(bfs_atlas(0), std::invalid_argument);
  try {
    bfs_atlas(11);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("MiB") != std::string::npos);
  }
}

TEST_CASE("class predicates") {
  const std::vector<int> p{1, 3, 2};
  CHECK(ClassPredicate::fixes_1().matches(p));
  CHECK(ClassPredicate::first_element_is(1).matches(p));
  CHECK_FALSE(ClassPredicate::fixes_element(2).matches(p));
  CHECK_FALSE(ClassPredicate::fixes_element(9).matches(p));
  CHECK(ClassPredicate::parse("first_element_is:3").kind == ClassPredicate::Kind::first_element_is);
  CHECK(ClassPredicate::parse("first_element_is:3").value == 3);
  CHECK(ClassPredicate::parse("fixes_element:2").value == 2);
  for (auto pred : {ClassPredicate::fixes_1(), ClassPredicate::first_element_is(4),
                    ClassPredicate::fixes_element(5)}) {
    const ClassPredicate back = ClassPredicate::parse(to_string(pred));
    CHECK(back.kind == pred.kind);
    CHECK(back.value == pred.value);
  }
  CHECK_THROWS_AS(ClassPredicate::parse("fixes_2"), std::invalid_argument);
  CHECK_THROWS_AS(ClassPredicate::parse("fixes_element:"), std::invalid_argument);
}

TEST_CASE("refined counts") {
  const DistanceAtlas a3 = bfs_atlas(3);
  const auto fix1 = refined_counts(a3, ClassPredicate::fixes_1());
  CHECK(fix1 == std::vector<ExactInteger>{1, 0, 0, 1});

  const DistanceAtlas a6 = bfs_atlas(6);
  const WhitneyTable w5 = build_table(5, Method::explicit_formula);
  for (int i = 2; i <= 6; ++i) {
    const auto counts = refined_counts(a6, ClassPredicate::first_element_is(i));
    for (int k = 0; k < static_cast<int>(counts.size()); ++k) CHECK(counts[k] == w5.at(k - 1));
  }
  // Lambda overload agrees with the named predicate.
  const auto lambda = refined_counts(a6, [](std::span<const int> v) { return v[0] == 1; });
  CHECK(lambda == refined_counts(a6, ClassPredicate::fixes_1()));
}
