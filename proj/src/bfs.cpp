#include "pexc/bfs.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>

namespace pexc {

namespace {

constexpr std::uint8_t kUnvisited = 0xFF;

std::array<std::uint64_t, kMaxAtlasSize + 1> factorials() {
  std::array<std::uint64_t, kMaxAtlasSize + 1> f{};
  f[0] = 1;
  for (int i = 1; i <= kMaxAtlasSize; ++i) f[i] = f[i - 1] * i;
  return f;
}

const auto kFactorial = factorials();

class Bitset {
 public:
  explicit Bitset(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}

  void set(std::uint64_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void clear() { std::fill(words_.begin(), words_.end(), 0); }
  bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        f(static_cast<std::uint64_t>(w) * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  void swap(Bitset& other) { words_.swap(other.words_); }

 private:
  std::vector<std::uint64_t> words_;
};

}  // namespace

std::uint64_t rank_permutation(std::span<const int> image) {
  const int n = static_cast<int>(image.size());
  if (n > 20) throw std::invalid_argument("rank_permutation: n too large for 64-bit rank");
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (image[j] < image[i]) ++smaller_after;
    rank = rank * (n - i) + smaller_after;
  }
  return rank;
}

void unrank_permutation(std::uint64_t rank, std::span<int> image) {
  const int n = static_cast<int>(image.size());
  // Mixed-radix digits, least significant last.
  std::array<int, 21> digit{};
  for (int i = n - 1; i >= 0; --i) {
    const std::uint64_t radix = n - i;
    digit[i] = static_cast<int>(rank % radix);
    rank /= radix;
  }
  std::array<int, 21> pool{};
  for (int v = 0; v < n; ++v) pool[v] = v + 1;
  int remaining = n;
  for (int i = 0; i < n; ++i) {
    const int d = digit[i];
    image[i] = pool[d];
    for (int j = d; j < remaining - 1; ++j) pool[j] = pool[j + 1];
    --remaining;
  }
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  std::vector<int> image(n);
  unrank_permutation(rank, image);
  return Permutation(std::move(image));
}

int DistanceAtlas::distance_of(const Permutation& p) const {
  if (p.size() != n_) throw std::invalid_argument("distance_of: size mismatch");
  return distance_[rank_permutation(p.image())];
}

WhitneyTable DistanceAtlas::histogram_table() const {
  WhitneyTable t{n_, {}, Method::bfs};
  for (auto c : histogram_) t.values.emplace_back(static_cast<unsigned long>(c));
  return t;
}

DistanceAtlas bfs_atlas(int n) {
  if (n < 1 || n > kMaxAtlasSize) {
    std::string msg = "bfs_atlas: n=" + std::to_string(n) + " outside supported range 1.." +
                      std::to_string(kMaxAtlasSize);
    if (n > kMaxAtlasSize && n <= 20) {
      // n! bytes of distances plus two n!-bit frontiers.
      std::uint64_t states = 1;
      for (int i = 2; i <= n; ++i) states *= i;
      const std::uint64_t bytes = states + 2 * ((states + 63) / 64) * 8;
      msg += " (would need about " + std::to_string(bytes / (1024 * 1024)) + " MiB)";
    }
    throw std::invalid_argument(msg);
  }

  DistanceAtlas atlas;
  atlas.n_ = n;
  const std::uint64_t states = kFactorial[n];
  atlas.distance_.assign(states, kUnvisited);

  Bitset frontier(states);
  Bitset next(states);
  atlas.distance_[0] = 0;
  frontier.set(0);
  atlas.histogram_.push_back(1);

  std::vector<int> image(n);
  for (int level = 0; !frontier.none(); ++level) {
    next.clear();
    std::uint64_t reached = 0;
    frontier.for_each([&](std::uint64_t rank) {
      unrank_permutation(rank, image);
      for (int i = 1; i < n; ++i) {
        std::swap(image[0], image[i]);
        const std::uint64_t r = rank_permutation(image);
        if (atlas.distance_[r] == kUnvisited) {
          atlas.distance_[r] = static_cast<std::uint8_t>(level + 1);
          next.set(r);
          ++reached;
        }
        std::swap(image[0], image[i]);
      }
    });
    if (reached) atlas.histogram_.push_back(reached);
    frontier.swap(next);
  }
  return atlas;
}

bool ClassPredicate::matches(std::span<const int> image) const {
  switch (kind) {
    case Kind::fixes_1: return image[0] == 1;
    case Kind::first_element_is: return image[0] == value;
    case Kind::fixes_element:
      return value >= 1 && value <= static_cast<int>(image.size()) && image[value - 1] == value;
  }
  return false;
}

ClassPredicate ClassPredicate::parse(std::string_view text) {
  if (text == "fixes_1") return fixes_1();
  const auto colon = text.find(':');
  if (colon != std::string_view::npos) {
    const std::string_view name = text.substr(0, colon);
    const std::string_view arg = text.substr(colon + 1);
    int v = 0;
    auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), v);
    const bool ok = ec == std::errc{} && ptr == arg.data() + arg.size() && !arg.empty();
    if (ok && name == "first_element_is") return first_element_is(v);
    if (ok && name == "fixes_element") return fixes_element(v);
  }
  throw std::invalid_argument("unknown predicate '" + std::string(text) + "'");
}

std::string to_string(const ClassPredicate& predicate) {
  switch (predicate.kind) {
    case ClassPredicate::Kind::fixes_1: return "fixes_1";
    case ClassPredicate::Kind::first_element_is:
      return "first_element_is:" + std::to_string(predicate.value);
    case ClassPredicate::Kind::fixes_element:
      return "fixes_element:" + std::to_string(predicate.value);
  }
  return "unknown";
}

std::vector<ExactInteger> refined_counts(
    const DistanceAtlas& atlas, const std::function<bool(std::span<const int>)>& predicate) {
  std::vector<std::uint64_t> counts(atlas.max_distance() + 1, 0);
  std::vector<int> image(atlas.n());
  for (std::uint64_t r = 0; r < atlas.size(); ++r) {
    unrank_permutation(r, image);
    if (predicate(image)) ++counts[atlas.distance_at(r)];
  }
  std::vector<ExactInteger> out;
  out.reserve(counts.size());
  for (auto c : counts) out.emplace_back(static_cast<unsigned long>(c));
  return out;
}

std::vector<ExactInteger> refined_counts(const DistanceAtlas& atlas,
                                         const ClassPredicate& predicate) {
  return refined_counts(atlas, [&](std::span<const int> image) { return predicate.matches(image); });
}

}  // namespace pexc
