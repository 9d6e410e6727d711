#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>

namespace lowerset::bounds {

/// Natural logarithm of a positive quantity. Every bound is evaluated in this
/// scale; quantities like gamma_d overflow any float once exponentiated.
struct LogValue {
  long double ln = 0.0L;

  friend auto operator<=>(const LogValue&, const LogValue&) = default;
};

/// pi * sqrt(2/3), the Hardy-Ramanujan exponent for linear partitions.
long double alpha2();
/// e^{alpha2}.
long double beta2();
inline constexpr long double kSigma1 = 1.25L;
inline constexpr long double kSigma2 = 2.6L;

/// ln(k!) by direct summation.
long double ln_factorial(std::uint64_t k);

struct Thm1Bounds {
  LogValue lower;  // ln(d^{n-1} / (n-1)!)
  LogValue upper;  // ln(d^{n-1})
};
/// Uniform sandwich for d >= 2, n >= 1.
Thm1Bounds thm1_bounds(std::size_t d, std::size_t n);

/// min(dn ln 2, (n-1) ln d + ln (n-1)!).
LogValue cohen_bound(std::size_t d, std::size_t n);

/// alpha2 * sqrt(n); valid for p_2(n).
LogValue hardy_ramanujan_upper(std::size_t n);

struct Theorem2Constants {
  long double c_prime;   // lower constant for ln p_d(n) / n^{1-1/d}
  long double c_upper;   // alpha2 * d^{ln d}
  long double lambda_d;  // d / (d!)^{1/d}
};
/// Requires d >= 2, n >= 2.
Theorem2Constants theorem2_constants(std::size_t d, std::size_t n);

/// Riemann zeta at an integer s >= 2, absolute error below 1e-12.
long double zeta(unsigned s);

/// d/(d-1) * ((d-1) zeta(d))^{1/d}, the conjectured limit constant.
long double rho(std::size_t d);

/// ln gamma_d = alpha2 * d^{ln d}. Never exponentiated.
LogValue gamma_ln(std::size_t d);

/// The exponent r(d) of gamma_{d-1} in the induction step, d >= 3.
long double r_of_d(std::size_t d);

/// d^{sigma1 d} <= gamma_{d-1} and d^{sigma2 d} <= gamma_d, compared in logs. d >= 3.
bool sigma_check(std::size_t d);

/// (gamma_{d-1})^{r(d)} < gamma_d in logs. d >= 3.
bool induction_step_holds(std::size_t d);

/// alpha2 * prod_{k=3}^{d} k^{1/(k-1)}.
long double alpha_product_bound(std::size_t d);

}  // namespace lowerset::bounds
