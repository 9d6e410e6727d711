#include "lowerset/partition_oracles.hpp"

namespace lowerset {

std::vector<BigCount> partition_oracle_2d(std::size_t n_max) {
  // table[s] holds partitions of s with every part <= k after pass k.
  std::vector<BigCount> table(n_max + 1, 0);
  table[0] = 1;
  for (std::size_t k = 1; k <= n_max; ++k)
    for (std::size_t s = k; s <= n_max; ++s) table[s] += table[s - k];
  return table;
}

std::vector<BigCount> plane_partition_oracle_3d(std::size_t n_max) {
  std::vector<BigCount> series(n_max + 1, 0);
  series[0] = 1;
  // Multiply by 1/(1 - q^k) once for each of its k copies.
  for (std::size_t k = 1; k <= n_max; ++k)
    for (std::size_t rep = 0; rep < k; ++rep)
      for (std::size_t s = k; s <= n_max; ++s) series[s] += series[s - k];
  return series;
}

}  // namespace lowerset
