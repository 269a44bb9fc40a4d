#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pexc {

/// A permutation of {1, ..., n} in one-line notation.
///
/// Positions and values are one-based at the interface; storage is a plain
/// zero-indexed vector holding the one-based values.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `image` is a bijection of {1..n}, n >= 1.
  explicit Permutation(std::vector<int> image);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }

  /// Value at one-based `position`.
  int operator[](int position) const { return image_[position - 1]; }

  std::span<const int> image() const { return image_; }

  bool is_identity() const;

  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> image, Unchecked) : image_(std::move(image)) {}

  friend Permutation apply_prefix_exchange(const Permutation&, int);
  friend Permutation reduce(std::span<const int>);
  friend class PermutationSampler;

  std::vector<int> image_;
};

/// Parses space-separated one-line notation, e.g. "4 1 6 2 5 7 3".
/// Errors name the offending position.
Permutation parse_permutation(std::string_view text);

/// Cycles in canonical order: each cycle starts at its smallest element and
/// cycles are sorted by that element.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  int fixed_point_count = 0;
  int long_cycle_count = 0;

  bool operator==(const CycleDecomposition&) const = default;
};

CycleDecomposition decompose(const Permutation& p);

std::string to_string(const CycleDecomposition& d);

/// Returns p∘(1,i): the entries at positions 1 and i swapped.
Permutation apply_prefix_exchange(const Permutation& p, int position);

/// Relabels distinct integers to {1..r} preserving relative order.
Permutation reduce(std::span<const int> values);

/// Seeded uniform permutation source.
///
/// Engine is std::mt19937_64 (its output sequence is fixed by the C++
/// standard). Bounded draws use Lemire's multiply-and-reject method, and the
/// shuffle is a single Fisher-Yates pass from the back, so the outputs are
/// identical on every conforming platform.
class PermutationSampler {
 public:
  explicit PermutationSampler(std::uint64_t seed) : engine_(seed) {}

  Permutation draw(int n);

  /// Fisher-Yates shuffle of `values` in place.
  void shuffle(std::span<int> values);

  /// Unbiased integer in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

Permutation sample_uniform(int n, std::uint64_t seed);

}  // namespace pexc
