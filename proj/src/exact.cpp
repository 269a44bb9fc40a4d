#include "pexc/exact.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace pexc {

ExactRatio make_ratio(const ExactInteger& numerator, const ExactInteger& denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  ExactRatio r(numerator, denominator);
  r.canonicalize();
  return r;
}

std::string to_string(const ExactInteger& value) { return value.get_str(10); }

std::string to_string(const ExactRatio& value) {
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

ExactInteger parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("malformed integer '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("malformed integer '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return ExactInteger(s, 10);
}

ExactRatio parse_ratio(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return ExactRatio(parse_integer(text));
  return make_ratio(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

ExactInteger factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  ExactInteger out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

ExactInteger binomial(int n, int k) {
  if (n < 0) throw std::invalid_argument("binomial with negative n");
  if (k < 0 || k > n) return 0;
  ExactInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

StirlingTable::StirlingTable(int max_n) {
  if (max_n < 0) throw std::invalid_argument("StirlingTable: negative size");
  rows_.reserve(max_n + 1);
  rows_.push_back({ExactInteger(1)});
  for (int n = 1; n <= max_n; ++n) {
    const auto& prev = rows_.back();
    std::vector<ExactInteger> row(n + 1);
    for (int k = 1; k <= n; ++k) {
      row[k] = prev[k - 1];
      if (k <= n - 1) row[k] += (n - 1) * prev[k];
    }
    rows_.push_back(std::move(row));
  }
}

const ExactInteger& StirlingTable::unsigned_entry(int n, int k) const {
  static const ExactInteger zero(0);
  if (n < 0 || n > max_n()) throw std::out_of_range("StirlingTable: row out of range");
  if (k < 0 || k > n) return zero;
  return rows_[n][k];
}

ExactInteger StirlingTable::signed_entry(int n, int k) const {
  const ExactInteger& v = unsigned_entry(n, k);
  return ((n - k) % 2 == 0) ? v : ExactInteger(-v);
}

namespace {

// Shared memo tables grow on demand; readers copy values out under the lock.
class StirlingCache {
 public:
  ExactInteger get(int n, int k) {
    std::lock_guard lock(mutex_);
    if (!table_ || table_->max_n() < n) {
      int size = table_ ? table_->max_n() : 0;
      while (size < n) size = size ? 2 * size : 64;
      table_ = std::make_unique<StirlingTable>(size);
    }
    return table_->unsigned_entry(n, k);
  }

 private:
  std::mutex mutex_;
  std::unique_ptr<StirlingTable> table_;
};

StirlingCache& stirling_cache() {
  static StirlingCache cache;
  return cache;
}

class DerangementCache {
 public:
  ExactInteger get(int n, int k) {
    std::lock_guard lock(mutex_);
    if (rows_.empty()) {
      rows_.push_back({ExactInteger(1)});  // d(0,0) = 1
      rows_.push_back({ExactInteger(0)});  // d(1,0) = 0
    }
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<ExactInteger> row(m / 2 + 1);
      // Element m either joins one of the m-1 slots of an existing cycle, or
      // forms a 2-cycle with one of m-1 partners from a (m-2)-derangement.
      for (int k = 1; k <= m / 2; ++k) {
        ExactInteger v = at(m - 1, k) + at(m - 2, k - 1);
        row[k] = (m - 1) * v;
      }
      rows_.push_back(std::move(row));
    }
    return at(n, k);
  }

 private:
  ExactInteger at(int n, int k) const {
    const auto& row = rows_[n];
    if (k < 0 || k >= static_cast<int>(row.size())) return 0;
    return row[k];
  }

  std::mutex mutex_;
  std::vector<std::vector<ExactInteger>> rows_;
};

DerangementCache& derangement_cache() {
  static DerangementCache cache;
  return cache;
}

// sum_{j=lo}^{hi-1} 1/j^power as num/den, binary splitting keeps operand sizes balanced.
void split_sum(unsigned long lo, unsigned long hi, unsigned power, ExactInteger& num,
               ExactInteger& den) {
  if (hi - lo == 1) {
    num = 1;
    ExactInteger j(lo);
    den = j;
    for (unsigned p = 1; p < power; ++p) den *= j;
    return;
  }
  const unsigned long mid = lo + (hi - lo) / 2;
  ExactInteger ln, ld, rn, rd;
  split_sum(lo, mid, power, ln, ld);
  split_sum(mid, hi, power, rn, rd);
  num = ln * rd + rn * ld;
  den = ld * rd;
}

ExactRatio power_sum(int n, unsigned power) {
  if (n < 1) throw std::invalid_argument("harmonic sum requires n >= 1");
  ExactInteger num, den;
  split_sum(1, static_cast<unsigned long>(n) + 1, power, num, den);
  return make_ratio(num, den);
}

}  // namespace

ExactInteger signless_stirling(int n, int k) {
  if (n < 0) throw std::invalid_argument("signless_stirling: negative n");
  if (k < 0 || k > n) return 0;
  return stirling_cache().get(n, k);
}

ExactInteger signed_stirling(int n, int k) {
  ExactInteger v = signless_stirling(n, k);
  if ((n - k) % 2 != 0) v = -v;
  return v;
}

ExactInteger derangement_cycles(int n, int k) {
  if (n < 0) throw std::invalid_argument("derangement_cycles: negative n");
  if (k < 0 || 2 * k > n) return 0;
  return derangement_cache().get(n, k);
}

ExactInteger derangement_cycles_alternating(int n, int k) {
  if (n < 0) throw std::invalid_argument("derangement_cycles_alternating: negative n");
  if (k < 0) return 0;
  ExactInteger sum = 0;
  for (int j = 0; j <= k && j <= n; ++j) {
    const ExactInteger term = binomial(n, j) * signless_stirling(n - j, k - j);
    if (j % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

ExactRatio harmonic(int n) { return power_sum(n, 1); }

ExactRatio harmonic_squares(int n) { return power_sum(n, 2); }

}  // namespace pexc
