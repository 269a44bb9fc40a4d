#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pexc/permutation.hpp"

namespace pexc {

/// Prefix-exchange distance to the identity:
///   n + (cycles of length >= 2) - (fixed points) - (0 if p[1] == 1 else 2).
int distance(const Permutation& p);

/// Same formula on a raw one-line image (values 1..n, assumed bijective).
int distance(std::span<const int> image);

/// Largest distance in S_n: floor(3(n-1)/2).
int diameter(int n);

/// Positions i of the prefix exchanges (1,i), applied left to right.
struct SortingTrace {
  std::vector<int> moves;

  int length() const { return static_cast<int>(moves.size()); }
  bool operator==(const SortingTrace&) const = default;
};

/// A shortest sorting sequence. If p[1] = v != 1 the move sends v home;
/// otherwise it swaps with the smallest misplaced position.
SortingTrace optimal_sort(const Permutation& p);

Permutation apply_trace(Permutation p, const SortingTrace& trace);

/// Comma-separated positions, e.g. "4,2,3"; the empty trace is "".
std::string to_string(const SortingTrace& trace);
SortingTrace parse_trace(std::string_view text);

}  // namespace pexc
