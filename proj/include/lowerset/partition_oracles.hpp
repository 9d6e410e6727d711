#pragma once

#include <cstddef>
#include <vector>

#include "lowerset/big_count.hpp"

namespace lowerset {

// Independent routes to p_2 and p_3. Neither touches the growth-tree code, so
// a disagreement with the DFS count points at one side or the other.

/// p_2(n) for n = 0..n_max: partitions counted with largest part <= k, k increasing.
std::vector<BigCount> partition_oracle_2d(std::size_t n_max);

/// p_3(n) for n = 0..n_max: coefficients of prod_{k>=1} (1 - q^k)^{-k}.
std::vector<BigCount> plane_partition_oracle_3d(std::size_t n_max);

}  // namespace lowerset
