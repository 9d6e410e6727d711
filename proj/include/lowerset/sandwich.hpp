#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lowerset/big_count.hpp"
#include "lowerset/bounds.hpp"

namespace lowerset::bounds {

/// Absolute slack used when a real-valued bound is compared with ln p_d(n).
inline constexpr long double kLogTolerance = 1e-9L;

/// Every bound for one (d, n) cell next to the exact count. Fields that do
/// not apply to the cell (d = 1, n = 1, HR off d = 2) stay empty.
struct BoundsReport {
  std::size_t d = 0;
  std::size_t n = 0;
  BigCount exact;
  long double ln_p = 0.0L;
  std::optional<long double> thm1_lo, thm1_hi;
  long double cohen = 0.0L;
  std::optional<long double> hr;
  std::optional<long double> c_prime, c_upper, lambda_d, rho_d;
  std::optional<long double> ratio;  // ln p / n^{1-1/d}
  std::optional<long double> thm4;   // ln gamma_d * n^{1-1/d}
  std::optional<long double> eq_a;
  /// Tokens "<check>:<pass|boundary|fail|skipped>".
  std::vector<std::string> flags;

  /// No flag reports a failure; boundary and skipped cells still pass.
  bool all_pass() const;
  bool has_flag(const std::string& token) const;
};

/// Fills a report for p_d(n) = exact. Integer-valued bounds are decided by
/// exact integer comparison, the rest in log scale with kLogTolerance.
BoundsReport verify_sandwich(std::size_t d, std::size_t n, const BigCount& exact);

/// "d,n,ln_p,thm1_lo,thm1_hi,cohen,hr,c_prime_ratio,c_upper,eq_a,flags"
std::string bounds_csv_header();
std::string to_csv_row(const BoundsReport& r);

}  // namespace lowerset::bounds
