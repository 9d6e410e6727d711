#include "lowerset/hyperbolic_cross.hpp"

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

namespace lowerset::disc {

namespace {

std::uint64_t cross_size(std::size_t d, std::uint64_t n,
                         std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t>& memo) {
  if (n == 0) return 0;
  if (d == 1) return n;
  auto key = std::make_pair(d, n);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  // floor(n/k) is constant on blocks of k; sum a block at a time.
  for (std::uint64_t k = 1; k <= n;) {
    const std::uint64_t q = n / k;
    const std::uint64_t k_end = n / q;
    total += (k_end - k + 1) * cross_size(d - 1, q, memo);
    k = k_end + 1;
  }
  memo.emplace(key, total);
  return total;
}

}  // namespace

BigCount hyperbolic_cross_size(std::size_t d, std::size_t n) {
  if (d == 0 || n == 0) throw std::invalid_argument("hyperbolic cross needs d >= 1, n >= 1");
  std::map<std::pair<std::size_t, std::uint64_t>, std::uint64_t> memo;
  return big_count(cross_size(d, n, memo));
}

double hyperbolic_cross_bound(std::size_t d, std::size_t n) {
  if (d == 0 || n == 0) throw std::invalid_argument("hyperbolic cross needs d >= 1, n >= 1");
  const double nd = static_cast<double>(n);
  return nd * std::pow(1.0 + std::log(nd), static_cast<double>(d - 1));
}

Regime regime_table(std::size_t d, std::size_t n) {
  if (d < 2 || n < 2) throw std::invalid_argument("regime_table needs d >= 2, n >= 2");
  BigCount dd;
  mpz_ui_pow_ui(dd.get_mpz_t(), d, d);
  const double nd = static_cast<double>(n);
  return Regime{big_count(n) < dd ? "n < d^d" : "n >= d^d",
                nd * nd * std::log(static_cast<double>(d)), hyperbolic_cross_bound(d, n)};
}

}  // namespace lowerset::disc
