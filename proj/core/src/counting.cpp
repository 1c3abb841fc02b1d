#include "rootsc/counting.hpp"

#include <cmath>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "rootsc/errors.hpp"

namespace rootsc {

namespace {

// Rows of the Stirling triangle, grown on demand.
class StirlingTable {
 public:
  BigCount get(std::int64_t n, std::int64_t k) {
    std::lock_guard lock(mu_);
    while (static_cast<std::int64_t>(rows_.size()) <= n) extend();
    return rows_[n][k];
  }

 private:
  void extend() {
    const std::size_t n = rows_.size();
    std::vector<BigCount> row(n + 1, 0);
    if (n == 0) {
      row[0] = 1;
    } else {
      const auto& prev = rows_[n - 1];
      for (std::size_t k = 1; k <= n; ++k) {
        BigCount v = prev[k - 1];
        if (k < n) v += BigCount(k) * prev[k];
        row[k] = std::move(v);
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mu_;
  std::vector<std::vector<BigCount>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

void check_coprime(std::int64_t k, std::int64_t l) {
  if (k < 2 || l < 2) throw InvalidArgument("ukl_size_formula needs k, l >= 2");
  if (std::gcd(k, l) != 1) {
    throw InvalidArgument("ukl_size_formula needs coprime k and l, got " + std::to_string(k) + "," +
                          std::to_string(l));
  }
}

}  // namespace

BigCount stirling2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) throw InvalidArgument("stirling2 needs n, k >= 0");
  if (k > n) return 0;
  return stirling_table().get(n, k);
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0) throw InvalidArgument("binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigCount factorial(std::int64_t n) {
  if (n < 0) throw InvalidArgument("factorial needs n >= 0");
  BigCount r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

BigCount ipow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw InvalidArgument("ipow needs a non-negative exponent");
  return boost::multiprecision::pow(BigCount(base), static_cast<unsigned>(exp));
}

BigCount ukl_formula_value(std::int64_t k, std::int64_t l) {
  if (k < 1 || l < 1) throw InvalidArgument("ukl_formula_value needs k, l >= 1");
  const std::int64_t n = k + l;
  BigCount total = k * l;
  for (std::int64_t i = 1; i <= n; ++i) {
    // Partitions of Z_n into i blocks minus those with no block meeting both cycles.
    BigCount split = 0;
    for (std::int64_t r = 1; r <= i; ++r) split += stirling2(k, r) * stirling2(l, i - r);
    const BigCount merging = stirling2(n, i) - split;
    // Image sets of size i that leave out some point of the second cycle.
    const BigCount images = binomial(n, i) - binomial(k, i - l);
    total += images * merging * factorial(i);
  }
  if (total < 0) throw Error("ukl_formula_value produced a negative count");
  return total;
}

BigCount ukl_size_formula(std::int64_t k, std::int64_t l) {
  check_coprime(k, l);
  return ukl_formula_value(k, l);
}

BigCount ukl_gap(std::int64_t n) {
  if (n < 5) throw InvalidArgument("ukl_gap needs n >= 5");
  return ukl_formula_value(2, n - 2) - ukl_formula_value(n - 2, 2);
}

double hk_bracket(std::int64_t n) {
  const double nn = static_cast<double>(n);
  const double e12 = std::exp(1.0 / 12.0);
  return 1.0 - std::sqrt(2.0) * std::pow(2.0 / std::exp(1.0), nn / 2.0) * e12 -
         std::sqrt(8.0) / std::sqrt(nn) * e12;
}

double hk_lower_bound(std::int64_t n) {
  if (n < 1) throw InvalidArgument("hk_lower_bound needs n >= 1");
  const double nn = static_cast<double>(n);
  return std::pow(nn, nn) * hk_bracket(n);
}

std::pair<std::int64_t, std::int64_t> best_coprime_pair(std::int64_t n) {
  if (n < 5) throw InvalidArgument("best_coprime_pair needs n >= 5");
  std::pair<std::int64_t, std::int64_t> best{0, 0};
  BigCount best_size = -1;
  for (std::int64_t k = 2; n - k >= 3; ++k) {
    const std::int64_t l = n - k;
    if (std::gcd(k, l) != 1) continue;
    BigCount s = ukl_size_formula(k, l);
    if (s > best_size) {
      best_size = std::move(s);
      best = {k, l};
    }
  }
  if (best.first == 0) throw InvalidArgument("no coprime split of " + std::to_string(n));
  return best;
}

BigCount max_ukl_size(std::int64_t n) {
  BigCount best = 0;
  for (std::int64_t k = 2; n - k >= 2; ++k) {
    if (std::gcd(k, n - k) != 1) continue;
    best = std::max(best, ukl_size_formula(k, n - k));
  }
  return best;
}

}  // namespace rootsc
