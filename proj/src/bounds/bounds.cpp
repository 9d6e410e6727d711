#include "lowerset/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowerset::bounds {

namespace {

constexpr long double kLn2 = std::numbers::ln2_v<long double>;

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

long double alpha2() { return std::numbers::pi_v<long double> * std::sqrt(2.0L / 3.0L); }

long double beta2() { return std::exp(alpha2()); }

long double ln_factorial(std::uint64_t k) {
  long double s = 0.0L;
  for (std::uint64_t i = 2; i <= k; ++i) s += std::log(static_cast<long double>(i));
  return s;
}

Thm1Bounds thm1_bounds(std::size_t d, std::size_t n) {
  require(d >= 2 && n >= 1, "thm1_bounds needs d >= 2, n >= 1");
  const long double upper = static_cast<long double>(n - 1) * std::log(static_cast<long double>(d));
  return {{upper - ln_factorial(n - 1)}, {upper}};
}

LogValue cohen_bound(std::size_t d, std::size_t n) {
  require(d >= 1 && n >= 1, "cohen_bound needs d >= 1, n >= 1");
  const long double power = static_cast<long double>(d * n) * kLn2;
  const long double factorial = static_cast<long double>(n - 1) * std::log(static_cast<long double>(d)) +
                                ln_factorial(n - 1);
  return {std::min(power, factorial)};
}

LogValue hardy_ramanujan_upper(std::size_t n) {
  require(n >= 1, "hardy_ramanujan_upper needs n >= 1");
  return {alpha2() * std::sqrt(static_cast<long double>(n))};
}

Theorem2Constants theorem2_constants(std::size_t d, std::size_t n) {
  require(d >= 2 && n >= 2, "theorem2_constants needs d >= 2, n >= 2");
  const auto dd = static_cast<long double>(d);
  const long double lambda = std::exp(std::log(dd) - ln_factorial(d) / dd);
  const long double shrink =
      std::min(dd / (dd + 1.0L), std::numbers::e_v<long double> *
                                     std::pow(static_cast<long double>(n), -1.0L / dd));
  const long double c_prime = (1.0L - shrink) * (1.0L - shrink) * lambda * kLn2;
  return {c_prime, gamma_ln(d).ln, lambda};
}

long double zeta(unsigned s) {
  require(s >= 2, "zeta needs s >= 2");
  // Partial sum to N-1, then Euler-Maclaurin for the tail:
  //   sum_{k>=N} k^-s = N^{1-s}/(s-1) + N^-s/2 + s N^{-s-1}/12 - R,
  // with |R| <= s(s+1)(s+2) N^{-s-3} / 720, well under 1e-15 at N = 1000.
  constexpr unsigned kN = 1000;
  const auto sd = static_cast<long double>(s);
  long double sum = 0.0L;
  for (unsigned k = kN - 1; k >= 1; --k) sum += std::pow(static_cast<long double>(k), -sd);
  const long double n = kN;
  sum += std::pow(n, 1.0L - sd) / (sd - 1.0L) + 0.5L * std::pow(n, -sd) +
         sd * std::pow(n, -sd - 1.0L) / 12.0L;
  return sum;
}

long double rho(std::size_t d) {
  require(d >= 2, "rho needs d >= 2");
  const auto dd = static_cast<long double>(d);
  return dd / (dd - 1.0L) * std::pow((dd - 1.0L) * zeta(static_cast<unsigned>(d)), 1.0L / dd);
}

LogValue gamma_ln(std::size_t d) {
  require(d >= 2, "gamma_ln needs d >= 2");
  const long double l = std::log(static_cast<long double>(d));
  return {alpha2() * std::exp(l * l)};
}

long double r_of_d(std::size_t d) {
  require(d >= 3, "r_of_d needs d >= 3");
  const auto dd = static_cast<long double>(d);
  const long double s2d = kSigma2 * dd;
  const long double l1 = std::log(dd - 1.0L);
  return 1.0L / (std::pow(s2d, dd / 2.0L - 1.0L) * std::exp(l1 * l1)) +
         1.0L / (kSigma1 * std::pow(s2d, dd - 2.0L)) + std::pow(dd, 1.0L / (dd - 1.0L));
}

bool sigma_check(std::size_t d) {
  require(d >= 3, "sigma_check needs d >= 3");
  const auto dd = static_cast<long double>(d);
  const long double dlnd = dd * std::log(dd);
  return kSigma1 * dlnd <= gamma_ln(d - 1).ln && kSigma2 * dlnd <= gamma_ln(d).ln;
}

bool induction_step_holds(std::size_t d) {
  require(d >= 3, "induction_step_holds needs d >= 3");
  return r_of_d(d) * gamma_ln(d - 1).ln < gamma_ln(d).ln;
}

long double alpha_product_bound(std::size_t d) {
  require(d >= 2, "alpha_product_bound needs d >= 2");
  long double log_prod = 0.0L;
  for (std::size_t k = 3; k <= d; ++k)
    log_prod += std::log(static_cast<long double>(k)) / static_cast<long double>(k - 1);
  return alpha2() * std::exp(log_prod);
}

}  // namespace lowerset::bounds
