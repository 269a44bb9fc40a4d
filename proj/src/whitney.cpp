#include "pexc/whitney.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pexc/bfs.hpp"
#include "pexc/distance.hpp"

namespace pexc {

namespace {

// Floor and ceiling of a / b for b > 0 and any sign of a.
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

void require_size(int n, const char* what) {
  if (n < 1) throw std::invalid_argument(std::string(what) + ": n must be >= 1");
}

bool outside_row(int n, int k) { return k < 0 || k > diameter(n); }

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::explicit_formula: return "explicit";
    case Method::recurrence_i: return "recurrence_i";
    case Method::recurrence_ii: return "recurrence_ii";
    case Method::generating_function: return "gf";
    case Method::bfs: return "bfs";
  }
  return "unknown";
}

Method parse_method(std::string_view text) {
  if (text == "explicit") return Method::explicit_formula;
  if (text == "recurrence_i") return Method::recurrence_i;
  if (text == "recurrence_ii") return Method::recurrence_ii;
  if (text == "gf") return Method::generating_function;
  if (text == "bfs") return Method::bfs;
  throw std::invalid_argument("unknown method '" + std::string(text) + "'");
}

ExactInteger WhitneyTable::total() const {
  ExactInteger sum = 0;
  for (const auto& v : values) sum += v;
  return sum;
}

ExactInteger WhitneyTable::at(int k) const {
  if (k < 0 || k >= static_cast<int>(values.size())) return 0;
  return values[k];
}

SummationBounds summation_bounds(int n, int k, int i) {
  SummationBounds b;
  b.i = i;
  b.lower = std::max(0, ceil_div(k - 2 * i, 2));
  b.upper = std::min(n - 1 - i, floor_div(k + 1 - i, 2));
  return b;
}

ExactInteger whitney_explicit(int n, int k) {
  require_size(n, "whitney_explicit");
  if (outside_row(n, k)) return 0;
  ExactInteger sum = 0;
  const int outer = std::min(n - 1, k + 1);
  for (int i = 0; i <= outer; ++i) {
    const SummationBounds b = summation_bounds(n, k, i);
    if (b.empty()) continue;
    const ExactInteger outer_binomial = binomial(n - 1, i);
    for (int t = b.lower; t <= b.upper; ++t) {
      ExactInteger term = outer_binomial * binomial(n - 1 - i, t) *
                          signed_stirling(i + 1, k - i + 1 - 2 * t);
      // (-1)^(k+2-t) = (-1)^(k-t)
      if ((k - t) % 2 != 0) term = -term;
      sum += term;
    }
  }
  return sum;
}

std::pair<ExactInteger, ExactInteger> whitney_split(int n, int k) {
  require_size(n, "whitney_split");
  ExactInteger fixes_one = 0;
  ExactInteger moves_one = 0;
  if (k < 0) return {fixes_one, moves_one};

  // p[1] = 1 with i fixed points (1 among them): the remaining n - i elements
  // form k - n + i cycles of length >= 2.
  for (int i = std::max(n - k, 1); i <= floor_div(2 * n - k, 2); ++i) {
    fixes_one += binomial(n - 1, i - 1) * derangement_cycles(n - i, k - n + i);
  }
  // p[1] != 1 with i fixed points: k - n + i + 2 long cycles.
  for (int i = std::max(n - k - 2, 0); i <= floor_div(2 * n - k - 2, 2); ++i) {
    moves_one += binomial(n - 1, i) * derangement_cycles(n - i, k - n + i + 2);
  }
  return {fixes_one, moves_one};
}

void TableContext::add(WhitneyTable row) {
  const int n = row.n;
  rows_.insert_or_assign(n, std::move(row));
}

const WhitneyTable& TableContext::row(int n) const {
  auto it = rows_.find(n);
  if (it == rows_.end()) {
    throw std::out_of_range("table context is missing row n=" + std::to_string(n));
  }
  return it->second;
}

ExactInteger TableContext::at(int n, int k) const { return row(n).at(k); }

ExactInteger whitney_initial(int n, int k) {
  require_size(n, "whitney_initial");
  if (outside_row(n, k)) return 0;
  switch (k) {
    case 0: return 1;
    case 1: return n - 1;
    case 2: return ExactInteger(n - 1) * (n - 2);
    default: throw std::invalid_argument("whitney_initial: k must be <= 2");
  }
}

ExactInteger whitney_recurrence_i(int n, int k, const TableContext& context) {
  require_size(n, "whitney_recurrence_i");
  if (outside_row(n, k)) return 0;
  if (k <= 2) return whitney_initial(n, k);
  // k >= 3 inside the row forces n >= 3.
  ExactInteger w = context.at(n - 1, k);
  w += (n - 1) * context.at(n - 1, k - 1);
  w -= (n - 2) * context.at(n - 2, k - 1);
  w += (n - 2) * context.at(n - 2, k - 3);
  return w;
}

ExactInteger whitney_recurrence_ii(int n, int k, const TableContext& context) {
  require_size(n, "whitney_recurrence_ii");
  if (outside_row(n, k)) return 0;
  if (k <= 2) return whitney_initial(n, k);
  ExactInteger w = (n - 1) * context.at(n - 1, k - 1);
  for (int j = 1; j <= n - 2; ++j) w += j * context.at(j, k - 3);
  return w;
}

bool whitney_recurrence_iii_check(int n, int k, const TableContext& context) {
  require_size(n, "whitney_recurrence_iii_check");
  if (outside_row(n, k)) {
    throw std::invalid_argument("whitney_recurrence_iii_check: k outside 0..diameter(n)");
  }
  const int top = n + k + 1;
  ExactInteger rhs = 0;
  for (int i = 1; i <= k + 1; ++i) {
    ExactInteger term = binomial(k + 1, i) * context.at(top - i, k);
    if (i % 2 == 0)
      rhs -= term;
    else
      rhs += term;
  }
  return context.at(top, k) == rhs;
}

DistancePolynomial::DistancePolynomial(std::vector<ExactInteger> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

ExactInteger DistancePolynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[k];
}

DistancePolynomial DistancePolynomial::derivative() const {
  std::vector<ExactInteger> d;
  for (int k = 1; k <= degree(); ++k) d.push_back(k * coefficients_[k]);
  return DistancePolynomial(std::move(d));
}

ExactRatio DistancePolynomial::evaluate(const ExactRatio& x) const {
  ExactRatio acc = 0;
  for (int k = degree(); k >= 0; --k) acc = acc * x + ExactRatio(coefficients_[k]);
  return acc;
}

DistancePolynomial generating_polynomial(int n) {
  require_size(n, "generating_polynomial");
  const int m = n - 1;
  std::vector<ExactInteger> result(2 * m + 1);

  // rising holds prod_{j=1}^i (x + j), updated in place as i grows.
  std::vector<ExactInteger> rising{ExactInteger(1)};
  for (int i = 0; i <= m; ++i) {
    if (i > 0) {
      std::vector<ExactInteger> next(rising.size() + 1);
      for (std::size_t d = 0; d < rising.size(); ++d) {
        next[d] += i * rising[d];
        next[d + 1] += rising[d];
      }
      rising = std::move(next);
    }
    // C(m,i) (1 - x^2)^(m-i) x^i rising(x); (1 - x^2)^e has coefficient
    // (-1)^t C(e,t) at x^(2t).
    const int e = m - i;
    const ExactInteger outer = binomial(m, i);
    for (int t = 0; t <= e; ++t) {
      ExactInteger c = outer * binomial(e, t);
      if (t % 2 != 0) c = -c;
      for (std::size_t d = 0; d < rising.size(); ++d) {
        result[2 * t + i + d] += c * rising[d];
      }
    }
  }
  return DistancePolynomial(std::move(result));
}

namespace {

WhitneyTable table_from_context(const TableContext& context, int n, Method method) {
  WhitneyTable t = context.row(n);
  t.method = method;
  return t;
}

}  // namespace

TableContext build_context(int max_n, Method method) {
  require_size(max_n, "build_context");
  TableContext context;
  for (int n = 1; n <= max_n; ++n) {
    if (method == Method::recurrence_i || method == Method::recurrence_ii) {
      WhitneyTable row{n, std::vector<ExactInteger>(diameter(n) + 1), method};
      for (int k = 0; k <= diameter(n); ++k) {
        row.values[k] = method == Method::recurrence_i ? whitney_recurrence_i(n, k, context)
                                                       : whitney_recurrence_ii(n, k, context);
      }
      context.add(std::move(row));
    } else {
      context.add(build_table(n, method));
    }
  }
  return context;
}

WhitneyTable build_table(int n, Method method) {
  require_size(n, "build_table");
  const int d = diameter(n);
  WhitneyTable table{n, std::vector<ExactInteger>(d + 1), method};
  switch (method) {
    case Method::explicit_formula:
      for (int k = 0; k <= d; ++k) table.values[k] = whitney_explicit(n, k);
      break;
    case Method::recurrence_i: {
      // Only rows n-1 and n-2 are referenced, so keep a two-row window.
      TableContext window;
      for (int m = 1; m <= n; ++m) {
        WhitneyTable row{m, std::vector<ExactInteger>(diameter(m) + 1), method};
        for (int k = 0; k <= diameter(m); ++k) row.values[k] = whitney_recurrence_i(m, k, window);
        window.add(std::move(row));
        window.drop_below(m - 1);
      }
      return table_from_context(window, n, method);
    }
    case Method::recurrence_ii:
      return table_from_context(build_context(n, method), n, method);
    case Method::generating_function: {
      const DistancePolynomial poly = generating_polynomial(n);
      if (poly.degree() > d) {
        throw std::logic_error("generating polynomial degree exceeds the diameter");
      }
      for (int k = 0; k <= d; ++k) table.values[k] = poly.coefficient(k);
      break;
    }
    case Method::bfs:
      return bfs_atlas(n).histogram_table();
  }
  return table;
}

}  // namespace pexc
