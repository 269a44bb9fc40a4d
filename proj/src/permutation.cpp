#include "pexc/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pexc {

namespace {

void validate_bijection(const std::vector<int>& image) {
  const int n = static_cast<int>(image.size());
  if (n == 0) throw std::invalid_argument("permutation must have at least one element");
  std::vector<int> seen_at(n + 1, 0);
  for (int pos = 1; pos <= n; ++pos) {
    const int v = image[pos - 1];
    if (v < 1 || v > n) {
      throw std::invalid_argument("position " + std::to_string(pos) + ": value " +
                                  std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen_at[v] != 0) {
      throw std::invalid_argument("position " + std::to_string(pos) + ": value " +
                                  std::to_string(v) + " already used at position " +
                                  std::to_string(seen_at[v]));
    }
    seen_at[v] = pos;
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  validate_bijection(image_);
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity: n must be >= 1");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image), Unchecked{});
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(image_[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<int> image;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    if (i == text.size()) break;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc{} || ptr != text.data() + j) {
      throw std::invalid_argument("position " + std::to_string(image.size() + 1) +
                                  ": not an integer: '" + std::string(text.substr(i, j - i)) +
                                  "'");
    }
    image.push_back(value);
    i = j;
  }
  return Permutation(std::move(image));
}

CycleDecomposition decompose(const Permutation& p) {
  const int n = p.size();
  CycleDecomposition out;
  std::vector<char> visited(n + 1, 0);
  // Scanning starts in increasing order, so every cycle begins at its
  // smallest element and cycles come out sorted.
  for (int start = 1; start <= n; ++start) {
    if (visited[start]) continue;
    std::vector<int> cycle;
    for (int x = start; !visited[x]; x = p[x]) {
      visited[x] = 1;
      cycle.push_back(x);
    }
    if (cycle.size() == 1)
      ++out.fixed_point_count;
    else
      ++out.long_cycle_count;
    out.cycles.push_back(std::move(cycle));
  }
  return out;
}

std::string to_string(const CycleDecomposition& d) {
  std::ostringstream os;
  for (const auto& c : d.cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ')';
  }
  return os.str();
}

Permutation apply_prefix_exchange(const Permutation& p, int position) {
  if (position < 2 || position > p.size()) {
    throw std::invalid_argument("prefix exchange position " + std::to_string(position) +
                                " outside 2.." + std::to_string(p.size()));
  }
  std::vector<int> image(p.image().begin(), p.image().end());
  std::swap(image[0], image[position - 1]);
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation reduce(std::span<const int> values) {
  if (values.empty()) throw std::invalid_argument("reduce: empty sequence");
  std::vector<int> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
  std::vector<int> image(values.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    if (r > 0 && values[order[r]] == values[order[r - 1]]) {
      throw std::invalid_argument("reduce: duplicate entry " + std::to_string(values[order[r]]));
    }
    image[order[r]] = static_cast<int>(r) + 1;
  }
  return Permutation(std::move(image), Permutation::Unchecked{});
}

std::uint64_t PermutationSampler::below(std::uint64_t bound) {
  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  unsigned __int128 m = static_cast<unsigned __int128>(engine_()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(engine_()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

void PermutationSampler::shuffle(std::span<int> values) {
  for (std::size_t i = values.size(); i > 1; --i) {
    const std::size_t j = below(i);
    std::swap(values[i - 1], values[j]);
  }
}

Permutation PermutationSampler::draw(int n) {
  if (n < 1) throw std::invalid_argument("sample_uniform: n must be >= 1");
  std::vector<int> image(n);
  std::iota(image.begin(), image.end(), 1);
  shuffle(image);
  return Permutation(std::move(image), Permutation::Unchecked{});
}

Permutation sample_uniform(int n, std::uint64_t seed) {
  return PermutationSampler(seed).draw(n);
}

}  // namespace pexc
