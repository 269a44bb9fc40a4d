#include "pexc/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "pexc/bfs.hpp"
#include "pexc/distance.hpp"
#include "pexc/moments.hpp"
#include "pexc/whitney.hpp"

namespace pexc {

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::optional<std::string> VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name + ": " + c.detail;
  return std::nullopt;
}

namespace {

std::string at(int n, int k) {
  return "n=" + std::to_string(n) + ", k=" + std::to_string(k);
}

// Returns the first k where the two rows differ, or -1.
int first_difference(const WhitneyTable& a, const WhitneyTable& b) {
  const int len = static_cast<int>(std::max(a.values.size(), b.values.size()));
  for (int k = 0; k < len; ++k)
    if (a.at(k) != b.at(k)) return k;
  return -1;
}

CheckResult four_way(int max_n, const TableContext& explicit_rows) {
  CheckResult r{"four_way_agreement", true, "n <= " + std::to_string(max_n)};
  const TableContext rec_i = build_context(max_n, Method::recurrence_i);
  const TableContext rec_ii = build_context(max_n, Method::recurrence_ii);
  for (int n = 1; n <= max_n; ++n) {
    const WhitneyTable& e = explicit_rows.row(n);
    const WhitneyTable gf = build_table(n, Method::generating_function);
    const std::pair<const WhitneyTable*, const char*> others[] = {
        {&rec_i.row(n), "recurrence_i"}, {&rec_ii.row(n), "recurrence_ii"}, {&gf, "gf"}};
    for (const auto& [other, name] : others) {
      const int k = first_difference(e, *other);
      if (k >= 0) {
        r.passed = false;
        r.detail = at(n, k) + ", explicit vs " + name;
        return r;
      }
    }
  }
  return r;
}

CheckResult bfs_agreement(int max_n, const TableContext& explicit_rows) {
  const int top = std::min(max_n, 8);
  CheckResult r{"bfs_agreement", true, "n <= " + std::to_string(top)};
  for (int n = 1; n <= top; ++n) {
    const DistanceAtlas atlas = bfs_atlas(n);
    const int k = first_difference(explicit_rows.row(n), atlas.histogram_table());
    if (k >= 0) {
      r.passed = false;
      r.detail = at(n, k) + ", explicit vs bfs";
      return r;
    }
    if (atlas.max_distance() != diameter(n)) {
      r.passed = false;
      r.detail = "n=" + std::to_string(n) + ", bfs max distance vs diameter";
      return r;
    }
    std::vector<int> image(n);
    for (std::uint64_t rank = 0; rank < atlas.size(); ++rank) {
      unrank_permutation(rank, image);
      if (distance(image) != atlas.distance_at(rank)) {
        r.passed = false;
        r.detail = "n=" + std::to_string(n) + ", rank " + std::to_string(rank) +
                   ", formula vs bfs distance";
        return r;
      }
    }
  }
  return r;
}

CheckResult recurrence_iii(int max_n, const TableContext& explicit_rows) {
  CheckResult r{"recurrence_iii", true, "n + k + 1 <= " + std::to_string(max_n)};
  for (int n = 1; n + 1 <= max_n; ++n) {
    for (int k = 0; k <= diameter(n) && n + k + 1 <= max_n; ++k) {
      if (!whitney_recurrence_iii_check(n, k, explicit_rows)) {
        r.passed = false;
        r.detail = at(n, k) + ", W_{n+k+1,k} vs alternating sum";
        return r;
      }
    }
  }
  return r;
}

CheckResult partition_and_initial(int max_n, const TableContext& explicit_rows) {
  CheckResult r{"partition_and_initial_values", true, "n <= " + std::to_string(max_n)};
  for (int n = 1; n <= max_n; ++n) {
    const WhitneyTable& t = explicit_rows.row(n);
    if (t.total() != factorial(n)) {
      r.passed = false;
      r.detail = "n=" + std::to_string(n) + ", row sum vs n!";
      return r;
    }
    for (int k = 0; k <= std::min(2, diameter(n)); ++k) {
      if (t.at(k) != whitney_initial(n, k)) {
        r.passed = false;
        r.detail = at(n, k) + ", explicit vs initial value";
        return r;
      }
    }
  }
  return r;
}

CheckResult moments(int max_n, const TableContext& explicit_rows) {
  CheckResult r{"moments", true, "n <= " + std::to_string(max_n)};
  for (int n = 1; n <= max_n; ++n) {
    const Moments from_table = moments_from_table(explicit_rows.row(n));
    const Moments from_poly = moments_from_polynomial(generating_polynomial(n), n);
    const bool variance_ok = n == 1 ? from_table.variance == 0
                                    : from_table.variance == variance_exact(n);
    if (from_table.mean != mean_exact(n) || !variance_ok) {
      r.passed = false;
      r.detail = "n=" + std::to_string(n) + ", closed form vs table moments";
      return r;
    }
    if (from_poly.mean != from_table.mean || from_poly.variance != from_table.variance) {
      r.passed = false;
      r.detail = "n=" + std::to_string(n) + ", polynomial derivatives vs table moments";
      return r;
    }
  }
  return r;
}

CheckResult splits(int max_n, const TableContext& explicit_rows) {
  CheckResult r{"split_identities", true, "n <= " + std::to_string(max_n)};
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= diameter(n); ++k) {
      const auto [w1, w2] = whitney_split(n, k);
      const auto fail = [&](const char* what) {
        r.passed = false;
        r.detail = at(n, k) + ", " + what;
      };
      if (w1 + w2 != explicit_rows.at(n, k)) {
        fail("W1 + W2 vs explicit");
        return r;
      }
      if (n >= 2 && w2 != (n - 1) * explicit_rows.at(n - 1, k - 1)) {
        fail("W2 vs (n-1) W_{n-1,k-1}");
        return r;
      }
      if (k >= 3) {
        ExactInteger sum = 0;
        for (int i = 1; i <= n - 2; ++i) sum += i * explicit_rows.at(i, k - 3);
        if (w1 != sum) {
          fail("W1 vs sum_i i W_{i,k-3}");
          return r;
        }
        if (n >= 3 && w1 != whitney_split(n - 1, k).first + (n - 2) * explicit_rows.at(n - 2, k - 3)) {
          fail("W1 vs W1_{n-1,k} + (n-2) W_{n-2,k-3}");
          return r;
        }
      }
    }
  }
  return r;
}

CheckResult class_counts(int max_n, const TableContext& explicit_rows) {
  const int top = std::min(max_n, 7);
  CheckResult r{"bfs_class_counts", true, "n <= " + std::to_string(top)};
  for (int n = 2; n <= top; ++n) {
    const DistanceAtlas atlas = bfs_atlas(n);
    const auto fixes = refined_counts(atlas, ClassPredicate::fixes_1());
    for (int k = 0; k <= diameter(n); ++k) {
      if (fixes[k] != whitney_split(n, k).first) {
        r.passed = false;
        r.detail = at(n, k) + ", bfs fixes_1 vs W1";
        return r;
      }
    }
    for (int i = 2; i <= n; ++i) {
      const auto counts = refined_counts(atlas, ClassPredicate::first_element_is(i));
      for (int k = 0; k <= diameter(n); ++k) {
        if (counts[k] != explicit_rows.at(n - 1, k - 1)) {
          r.passed = false;
          r.detail = at(n, k) + ", bfs first_element_is:" + std::to_string(i) +
                     " vs W_{n-1,k-1}";
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace

VerificationReport run_verification(int max_n) {
  if (max_n < 1) throw std::invalid_argument("run_verification: max_n must be >= 1");
  const TableContext explicit_rows = build_context(max_n, Method::explicit_formula);
  VerificationReport report;
  report.checks.push_back(four_way(max_n, explicit_rows));
  report.checks.push_back(bfs_agreement(max_n, explicit_rows));
  report.checks.push_back(recurrence_iii(max_n, explicit_rows));
  report.checks.push_back(partition_and_initial(max_n, explicit_rows));
  report.checks.push_back(moments(max_n, explicit_rows));
  report.checks.push_back(splits(max_n, explicit_rows));
  report.checks.push_back(class_counts(max_n, explicit_rows));
  return report;
}

}  // namespace pexc
