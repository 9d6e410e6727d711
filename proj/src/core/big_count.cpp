#include "lowerset/big_count.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowerset {

long double ln_of(const BigCount& c) {
  if (sgn(c) <= 0) throw std::domain_error("logarithm of a non-positive count");
  const std::size_t bits = mpz_sizeinbase(c.get_mpz_t(), 2);
  if (bits <= 64) {
    std::uint64_t v = 0;
    mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, c.get_mpz_t());
    return std::log(static_cast<long double>(v));
  }
  const std::size_t shift = bits - 64;
  BigCount top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), c.get_mpz_t(), shift);
  std::uint64_t v = 0;
  mpz_export(&v, nullptr, -1, sizeof(v), 0, 0, top.get_mpz_t());
  return std::log(static_cast<long double>(v)) +
         static_cast<long double>(shift) * std::numbers::ln2_v<long double>;
}

BigCount binomial(std::uint64_t n, std::uint64_t k) {
  BigCount r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace lowerset
