#include "lowerset/sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "lowerset/staircase.hpp"

namespace lowerset::bounds {

namespace {

BigCount power(std::uint64_t base, std::uint64_t exp) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

BigCount factorial(std::uint64_t k) {
  BigCount r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return r;
}

std::string verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string format_real(const std::optional<long double>& v) {
  if (!v) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", *v);
  return buf;
}

}  // namespace

bool BoundsReport::all_pass() const {
  return std::none_of(flags.begin(), flags.end(), [](const std::string& f) {
    return f.size() >= 5 && f.compare(f.size() - 5, 5, ":fail") == 0;
  });
}

bool BoundsReport::has_flag(const std::string& token) const {
  return std::find(flags.begin(), flags.end(), token) != flags.end();
}

BoundsReport verify_sandwich(std::size_t d, std::size_t n, const BigCount& exact) {
  if (d == 0 || n == 0) throw std::invalid_argument("verify_sandwich needs d >= 1, n >= 1");
  if (exact <= 0) throw std::invalid_argument("p_d(n) is positive");
  BoundsReport r;
  r.d = d;
  r.n = n;
  r.exact = exact;
  r.ln_p = ln_of(exact);
  const auto nd = static_cast<long double>(n);
  const auto dd = static_cast<long double>(d);

  if (d >= 2) {
    const auto t1 = thm1_bounds(d, n);
    r.thm1_lo = t1.lower.ln;
    r.thm1_hi = t1.upper.ln;
    // d^{n-1}/(n-1)! < p  <=>  d^{n-1} < p (n-1)!
    const BigCount lhs = power(d, n - 1);
    const BigCount rhs = exact * factorial(n - 1);
    r.flags.push_back(std::string("thm1_lo:") +
                      (lhs < rhs ? "pass" : lhs == rhs ? "boundary" : "fail"));
    r.flags.push_back("thm1_hi:" + verdict(exact <= lhs));
  } else {
    r.flags.push_back("thm1:skipped");
  }

  r.cohen = cohen_bound(d, n).ln;
  {
    const BigCount by_power = power(2, d * n);
    const BigCount by_factorial = power(d, n - 1) * factorial(n - 1);
    r.flags.push_back("cohen:" + verdict(exact <= std::min(by_power, by_factorial)));
  }

  if (d == 2) {
    r.hr = hardy_ramanujan_upper(n).ln;
    r.flags.push_back("hr:" + verdict(r.ln_p <= *r.hr + kLogTolerance));
  }

  if (d >= 2) {
    const long double scale = std::pow(nd, 1.0L - 1.0L / dd);
    r.c_upper = gamma_ln(d).ln;
    r.rho_d = rho(d);
    r.ratio = r.ln_p / scale;
    r.thm4 = *r.c_upper * scale;
    r.flags.push_back("thm4:" + verdict(r.ln_p <= *r.thm4 + kLogTolerance));
  }

  if (d >= 2 && n >= 2) {
    const auto c = theorem2_constants(d, n);
    r.c_prime = c.c_prime;
    r.lambda_d = c.lambda_d;
    r.flags.push_back("thm2_lo:" + verdict(c.c_prime <= *r.ratio + kLogTolerance));
    r.flags.push_back("thm2_hi:" + verdict(*r.ratio <= c.c_upper + kLogTolerance));

    r.eq_a = eq_a_lower_bound(d, n).ln;
    // (d/2) 2^{a_m} <= p  <=>  d 2^{a_m} <= 2p
    const auto a = staircase_numbers(d, choose_m(d, n)).a_m;
    BigCount lhs;
    mpz_mul_2exp(lhs.get_mpz_t(), BigCount(static_cast<unsigned long>(d)).get_mpz_t(), a.get_ui());
    r.flags.push_back("eq_a:" + verdict(lhs <= 2 * exact));
  } else {
    r.flags.push_back("thm2:skipped");
    r.flags.push_back("eq_a:skipped");
  }
  return r;
}

std::string bounds_csv_header() {
  return "d,n,ln_p,thm1_lo,thm1_hi,cohen,hr,c_prime_ratio,c_upper,eq_a,flags";
}

std::string to_csv_row(const BoundsReport& r) {
  std::string flags;
  for (const auto& f : r.flags) flags += (flags.empty() ? "" : ";") + f;
  return std::to_string(r.d) + "," + std::to_string(r.n) + "," + format_real(r.ln_p) + "," +
         format_real(r.thm1_lo) + "," + format_real(r.thm1_hi) + "," + format_real(r.cohen) + "," +
         format_real(r.hr) + "," + format_real(r.c_prime) + "," + format_real(r.c_upper) + "," +
         format_real(r.eq_a) + "," + flags;
}

}  // namespace lowerset::bounds
