#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rootsc {

/// Exact integer for counts such as n^n, |U_{k,l}| and Stirling numbers.
/// Signed, so differences of counts are representable too.
using BigCount = boost::multiprecision::cpp_int;

/// Stirling number of the second kind; 0 when k > n or (k < 1 and n >= 1).
BigCount stirling2(std::int64_t n, std::int64_t k);

/// 0 when k < 0 or k > n.
BigCount binomial(std::int64_t n, std::int64_t k);
BigCount factorial(std::int64_t n);
BigCount ipow(std::int64_t base, std::int64_t exp);

/// The closed-form sum below evaluated for any k, l >= 1, without the
/// coprimality that makes it the size of U_{k,l}.
BigCount ukl_formula_value(std::int64_t k, std::int64_t l);

/// Closed form for |U_{k,l}| with n = k + l:
///   kl + sum_{i=1..n} (C(n,i) - C(k,i-l)) (S(n,i) - sum_r S(k,r) S(l,i-r)) i!
/// Requires k, l >= 2 and gcd(k, l) = 1.
BigCount ukl_size_formula(std::int64_t k, std::int64_t l);

/// Formula difference |U_{2,n-2}| - |U_{n-2,2}| for n >= 5. For even n the
/// two terms are plain formula values (2 and n-2 are not coprime).
BigCount ukl_gap(std::int64_t n);

/// n^n (1 - sqrt(2) (2/e)^(n/2) e^(1/12) - sqrt(8/n) e^(1/12)); negative for small n.
double hk_lower_bound(std::int64_t n);

/// The bracketed factor of hk_lower_bound.
double hk_bracket(std::int64_t n);

/// argmax of ukl_size_formula over k >= 2, l >= 3, gcd(k, l) = 1, k + l = n;
/// ties go to the smaller k. Requires n >= 5.
std::pair<std::int64_t, std::int64_t> best_coprime_pair(std::int64_t n);

/// Largest ukl_size_formula(k, l) over every coprime split k, l >= 2 of n.
BigCount max_ukl_size(std::int64_t n);

}  // namespace rootsc
