#include "lowerset/partition.hpp"

#include <stdexcept>

namespace lowerset {

Partition to_partition(const LowerSet& q) {
  if (q.dim() < 2) throw std::invalid_argument("partitions need dimension >= 2");
  Partition p{q.dim(), {}};
  for (const auto& pt : q) {
    std::vector<Coord> base(pt.coords().begin(), pt.coords().end() - 1);
    for (auto& c : base) ++c;
    ++p.heights[Point(std::move(base))];
  }
  return p;
}

LowerSet from_partition(const Partition& p) {
  if (p.dim < 2) throw std::invalid_argument("partitions need dimension >= 2");
  const std::size_t base_dim = p.dim - 1;
  for (const auto& [base, h] : p.heights) {
    if (base.dim() != base_dim) throw std::invalid_argument("inconsistent dimension");
    if (h == 0) throw std::invalid_argument("not a partition");
    for (std::size_t i = 0; i < base_dim; ++i) {
      if (base[i] == 0) throw std::invalid_argument("not a partition");
      if (base[i] == 1) continue;
      auto below = p.heights.find(base.shifted(i, -1));
      if (below == p.heights.end() || below->second < h)
        throw std::invalid_argument("not a partition");
    }
  }
  std::vector<Point> pts;
  for (const auto& [base, h] : p.heights) {
    for (std::uint64_t level = 0; level < h; ++level) {
      std::vector<Coord> c(p.dim);
      for (std::size_t i = 0; i < base_dim; ++i) c[i] = base[i] - 1;
      c[base_dim] = static_cast<Coord>(level);
      pts.emplace_back(std::move(c));
    }
  }
  // Map order on bases is lex, and levels increase within a base, so pts is sorted.
  return LowerSet::from_sorted_unchecked(p.dim, std::move(pts));
}

}  // namespace lowerset
