#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lowerset {

/// Exact non-negative integer; p_d(n) leaves 64 bits quickly.
using BigCount = mpz_class;

inline BigCount big_count(std::uint64_t v) {
  BigCount c;
  mpz_import(c.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return c;
}

inline std::string to_string(const BigCount& c) { return c.get_str(10); }

/// Natural log of a positive integer, keeping the leading 64 bits of the
/// mantissa (long double on x86 carries all of them).
long double ln_of(const BigCount& c);

/// C(n, k) exactly.
BigCount binomial(std::uint64_t n, std::uint64_t k);

}  // namespace lowerset
