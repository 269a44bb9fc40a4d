#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pexc/exact.hpp"
#include "pexc/permutation.hpp"
#include "pexc/whitney.hpp"

namespace pexc {

inline constexpr int kMaxAtlasSize = 10;

/// Lehmer-code rank in the factorial number system; the identity has rank 0.
std::uint64_t rank_permutation(std::span<const int> image);

/// Inverse of rank_permutation; writes n one-based values into `image`.
void unrank_permutation(std::uint64_t rank, std::span<int> image);

Permutation unrank_permutation(int n, std::uint64_t rank);

/// Breadth-first distances from the identity in the prefix-exchange Cayley
/// graph of S_n, one byte per permutation, indexed by rank.
class DistanceAtlas {
 public:
  int n() const { return n_; }
  std::uint64_t size() const { return distance_.size(); }

  std::span<const std::uint8_t> distances() const { return distance_; }
  int distance_at(std::uint64_t rank) const { return distance_[rank]; }
  int distance_of(const Permutation& p) const;

  /// histogram()[k] = number of permutations at distance k.
  const std::vector<std::uint64_t>& histogram() const { return histogram_; }
  int max_distance() const { return static_cast<int>(histogram_.size()) - 1; }

  /// Histogram as a Whitney row tagged Method::bfs.
  WhitneyTable histogram_table() const;

 private:
  friend DistanceAtlas bfs_atlas(int n);

  int n_ = 0;
  std::vector<std::uint8_t> distance_;
  std::vector<std::uint64_t> histogram_;
};

/// Exhaustive BFS over S_n for 1 <= n <= 10. Peak memory is n! bytes of
/// distances plus two n!-bit frontier sets; larger n is rejected with the
/// estimate in the message.
DistanceAtlas bfs_atlas(int n);

/// Permutation classes used to refine distance counts.
struct ClassPredicate {
  enum class Kind { fixes_1, first_element_is, fixes_element };

  Kind kind = Kind::fixes_1;
  int value = 1;

  bool matches(std::span<const int> image) const;

  static ClassPredicate fixes_1() { return {Kind::fixes_1, 1}; }
  static ClassPredicate first_element_is(int i) { return {Kind::first_element_is, i}; }
  static ClassPredicate fixes_element(int j) { return {Kind::fixes_element, j}; }

  /// "fixes_1", "first_element_is:<i>", "fixes_element:<j>".
  static ClassPredicate parse(std::string_view text);
};

std::string to_string(const ClassPredicate& predicate);

/// counts[k] = number of permutations in the class at distance k, for
/// k = 0 .. atlas.max_distance().
std::vector<ExactInteger> refined_counts(const DistanceAtlas& atlas,
                                         const ClassPredicate& predicate);

std::vector<ExactInteger> refined_counts(
    const DistanceAtlas& atlas, const std::function<bool(std::span<const int>)>& predicate);

}  // namespace pexc
