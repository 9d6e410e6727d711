#pragma once

#include <cstdint>
#include <random>

#include "lowerset/lower_set.hpp"

namespace lowerset::testing {

/// Grows a lower set of size n by adding uniformly chosen addable points.
inline LowerSet random_lower_set(std::size_t d, std::size_t n, std::mt19937_64& rng) {
  LowerSet q(d);
  for (std::size_t k = 0; k < n; ++k) {
    const auto frontier = addable_points(q);
    std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
    auto pts = q.points();
    pts.push_back(frontier[pick(rng)]);
    q = LowerSet::from_points(d, std::move(pts));
  }
  return q;
}

}  // namespace lowerset::testing
