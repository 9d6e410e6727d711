#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lowerset/big_count.hpp"
#include "lowerset/bounds.hpp"
#include "lowerset/lower_set.hpp"

namespace lowerset::bounds {

/// Cardinalities of the corner layer A_m = {|k| = m} and the simplex
/// B_m = {|k| <= m} in Z_+^d.
struct StaircaseNumbers {
  std::size_t m;
  BigCount a_m;  // C(m+d-1, d-1)
  BigCount b_m;  // C(m+d, d)
};

StaircaseNumbers staircase_numbers(std::size_t d, std::size_t m);

/// The unique m >= 0 with b_m < n <= b_{m+1}. Requires d >= 2, n >= 2.
std::size_t choose_m(std::size_t d, std::size_t n);

/// ln(d/2) + a_m ln 2 for m = choose_m(d, n).
LogValue eq_a_lower_bound(std::size_t d, std::size_t n);

/// Points of A_m, lex-sorted.
std::vector<Point> corner_layer(std::size_t d, std::size_t m);

/// The simplex B_m with the corners outside `kept_corners` removed, extended
/// along `axis` (0-based) past the corner m e_axis until it has exactly n
/// points. `kept_corners` must be a subset of A_m containing m e_axis.
LowerSet build_staircase_family(std::size_t d, std::size_t n, std::span<const Point> kept_corners,
                                std::size_t axis);

}  // namespace lowerset::bounds
