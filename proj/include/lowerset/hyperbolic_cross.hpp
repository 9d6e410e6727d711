#pragma once

#include <cstddef>
#include <string>

#include "lowerset/big_count.hpp"

namespace lowerset::disc {

/// |{k in N^d : k_1 * ... * k_d <= n}|, by the divisor-style recursion
/// |H_d^n| = sum_{k=1}^{n} |H_{d-1}^{floor(n/k)}|.
BigCount hyperbolic_cross_size(std::size_t d, std::size_t n);

/// n (1 + ln n)^{d-1}.
double hyperbolic_cross_bound(std::size_t d, std::size_t n);

struct Regime {
  std::string label;        // "n < d^d" or "n >= d^d"
  double thm6;              // n^2 ln d
  double hyperbolic_bound;  // n (1 + ln n)^{d-1}
};

/// Which of the two sample-size bounds applies; n is compared with d^d exactly.
/// Requires d >= 2, n >= 2.
Regime regime_table(std::size_t d, std::size_t n);

}  // namespace lowerset::disc
