#include "pexc/distance.hpp"

#include <charconv>
#include <stdexcept>

namespace pexc {

int distance(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  std::vector<char> visited(n + 1, 0);
  int fixed = 0;
  int long_cycles = 0;
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    int length = 0;
    for (int x = start; !visited[x]; x = image[x - 1]) {
      visited[x] = 1;
      ++length;
    }
    if (length == 1)
      ++fixed;
    else
      ++long_cycles;
  }
  return n + long_cycles - fixed - (image[0] == 1 ? 0 : 2);
}

int distance(const Permutation& p) { return distance(p.image()); }

int diameter(int n) {
  if (n < 1) throw std::invalid_argument("diameter: n must be >= 1");
  return 3 * (n - 1) / 2;
}

SortingTrace optimal_sort(const Permutation& p) {
  std::vector<int> image(p.image().begin(), p.image().end());
  const int n = p.size();
  SortingTrace trace;
  // Positions > 1 only ever become fixed, so the scan for the smallest
  // misplaced position never moves backwards.
  int scan = 2;
  while (true) {
    const int front = image[0];
    int target;
    if (front != 1) {
      target = front;
    } else {
      while (scan <= n && image[scan - 1] == scan) ++scan;
      if (scan > n) break;
      target = scan;
    }
    std::swap(image[0], image[target - 1]);
    trace.moves.push_back(target);
  }
  return trace;
}

Permutation apply_trace(Permutation p, const SortingTrace& trace) {
  for (int move : trace.moves) p = apply_prefix_exchange(p, move);
  return p;
}

std::string to_string(const SortingTrace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(trace.moves[i]);
  }
  return out;
}

SortingTrace parse_trace(std::string_view text) {
  SortingTrace trace;
  if (text.empty()) return trace;
  std::size_t i = 0;
  while (true) {
    const std::size_t comma = text.find(',', i);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, value);
    if (ec != std::errc{} || ptr != text.data() + end || i == end) {
      throw std::invalid_argument("trace entry " + std::to_string(trace.moves.size() + 1) +
                                  " is not an integer");
    }
    trace.moves.push_back(value);
    if (comma == std::string_view::npos) break;
    i = comma + 1;
  }
  return trace;
}

}  // namespace pexc
