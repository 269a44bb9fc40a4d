#pragma once

#include <map>
#include <string_view>
#include <utility>
#include <vector>

#include "pexc/exact.hpp"

namespace pexc {

/// How a Whitney row was produced.
enum class Method { explicit_formula, recurrence_i, recurrence_ii, generating_function, bfs };

std::string_view to_string(Method method);

/// Accepts "explicit", "recurrence_i", "recurrence_ii", "gf", "bfs".
Method parse_method(std::string_view text);

/// Row n of the Whitney numbers: values[k] = #{p in S_n : distance(p) = k},
/// k = 0 .. diameter(n).
struct WhitneyTable {
  int n = 0;
  std::vector<ExactInteger> values;
  Method method = Method::explicit_formula;

  ExactInteger total() const;

  /// Zero outside 0..diameter(n).
  ExactInteger at(int k) const;

  /// Value equality; the method tag is provenance and not compared.
  bool same_values(const WhitneyTable& other) const {
    return n == other.n && values == other.values;
  }
};

/// Inner summation range of the explicit formula for a given outer index i.
struct SummationBounds {
  int i = 0;
  int lower = 0;  // max{0, ceil((k - 2i)/2)}
  int upper = 0;  // min{n - 1 - i, floor((k + 1 - i)/2)}

  bool empty() const { return lower > upper; }
};

SummationBounds summation_bounds(int n, int k, int i);

/// W_{n,k} from the closed double sum over binomials and signed Stirling
/// numbers. Zero for k outside 0..diameter(n).
ExactInteger whitney_explicit(int n, int k);

/// (permutations at distance k fixing 1, permutations at distance k moving 1),
/// each counted by summing binomial(...) * derangement_cycles(...) over the
/// number of fixed points.
std::pair<ExactInteger, ExactInteger> whitney_split(int n, int k);

/// Lower Whitney rows available to the recurrences, keyed by n.
/// Lookups are zero-extended in k; a missing row is an error.
class TableContext {
 public:
  void add(WhitneyTable row);
  bool has(int n) const { return rows_.count(n) != 0; }
  const WhitneyTable& row(int n) const;

  /// W_{n,k}; zero when k < 0 or k > diameter(n). Throws std::out_of_range if
  /// row n is absent.
  ExactInteger at(int n, int k) const;

  int max_n() const { return rows_.empty() ? 0 : rows_.rbegin()->first; }

  /// Forgets every row with index < n.
  void drop_below(int n) { rows_.erase(rows_.begin(), rows_.lower_bound(n)); }

 private:
  std::map<int, WhitneyTable> rows_;
};

/// Initial values W_{n,0} = 1, W_{n,1} = n - 1, W_{n,2} = (n-1)(n-2), zero past
/// the diameter.
ExactInteger whitney_initial(int n, int k);

/// W_{n,k} = W_{n-1,k} + (n-1) W_{n-1,k-1} - (n-2) W_{n-2,k-1} + (n-2) W_{n-2,k-3}
/// for k >= 3; initial values below. Needs rows n-1 and n-2 in `context`.
ExactInteger whitney_recurrence_i(int n, int k, const TableContext& context);

/// W_{n,k} = (n-1) W_{n-1,k-1} + sum_{j=1}^{n-2} j W_{j,k-3} for k >= 3.
/// Needs rows 1 .. n-1.
ExactInteger whitney_recurrence_ii(int n, int k, const TableContext& context);

/// Checks W_{n+k+1,k} = sum_{i=1}^{k+1} (-1)^{i+1} C(k+1,i) W_{n+k+1-i,k}
/// on the rows in `context` (rows n .. n+k+1 required).
bool whitney_recurrence_iii_check(int n, int k, const TableContext& context);

/// Polynomial with exact integer coefficients; coefficients[k] multiplies x^k.
/// Trailing zero coefficients are trimmed.
class DistancePolynomial {
 public:
  DistancePolynomial() = default;
  explicit DistancePolynomial(std::vector<ExactInteger> coefficients);

  const std::vector<ExactInteger>& coefficients() const { return coefficients_; }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }

  ExactInteger coefficient(int k) const;

  DistancePolynomial derivative() const;

  ExactRatio evaluate(const ExactRatio& x) const;

  bool operator==(const DistancePolynomial&) const = default;

 private:
  std::vector<ExactInteger> coefficients_;
};

/// W_n(x) = sum_i C(n-1,i) (1-x^2)^{n-1-i} x^i prod_{j=1}^i (x+j), expanded.
DistancePolynomial generating_polynomial(int n);

/// Full row by the given method. Method::bfs is limited to n <= 10.
WhitneyTable build_table(int n, Method method);

/// Rows 1..max_n built bottom-up by a recurrence method (or any method, row
/// by row). Cheaper than repeated build_table calls for sweeps.
TableContext build_context(int max_n, Method method);

}  // namespace pexc
