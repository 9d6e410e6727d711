#pragma once

#include <cstdint>
#include <map>

#include "lowerset/lower_set.hpp"

namespace lowerset {

/// A d-dimensional integer partition: stack heights over bases in N^{d-1}
/// (coordinates >= 1), non-increasing in every base coordinate.
struct Partition {
  std::size_t dim = 2;
  std::map<Point, std::uint64_t> heights;

  std::uint64_t total() const {
    std::uint64_t s = 0;
    for (const auto& [base, h] : heights) s += h;
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Heights of the shifted set q + 1 over each base: n_k counts the points of
/// q whose first d-1 coordinates equal k - 1. Requires dim >= 2.
Partition to_partition(const LowerSet& q);

/// Inverse of to_partition. Throws std::invalid_argument("not a partition")
/// on non-monotone or non-positive heights.
LowerSet from_partition(const Partition& p);

}  // namespace lowerset
