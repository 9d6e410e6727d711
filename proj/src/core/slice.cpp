#include "lowerset/slice.hpp"

#include <algorithm>
#include <stdexcept>

namespace lowerset {

SliceDecomposition slice_decompose(const LowerSet& q) {
  if (q.empty()) throw std::invalid_argument("cannot slice an empty set");
  if (q.dim() < 2) throw std::invalid_argument("slicing needs dimension >= 2");
  const std::size_t d = q.dim();
  const auto& pts = q.points();

  Coord max_coord = 0;
  for (const auto& p : pts)
    for (Coord c : p.coords()) max_coord = std::max(max_coord, c);

  std::vector<bool> alive(pts.size(), true);
  std::size_t remaining = pts.size();
  SliceDecomposition out;
  std::vector<std::size_t> counts(d * (max_coord + 1));

  while (remaining > 0) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (alive[j])
        for (std::size_t i = 0; i < d; ++i) ++counts[i * (max_coord + 1) + pts[j][i]];
    // Row-major scan with strict '>' keeps the lowest axis, then lowest level.
    const auto best = std::max_element(counts.begin(), counts.end()) - counts.begin();
    const std::size_t axis = static_cast<std::size_t>(best) / (max_coord + 1);
    const Coord level = static_cast<Coord>(static_cast<std::size_t>(best) % (max_coord + 1));

    std::vector<Point> members;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (!alive[j] || pts[j][axis] != level) continue;
      alive[j] = false;
      --remaining;
      std::vector<Coord> c;
      c.reserve(d - 1);
      for (std::size_t i = 0; i < d; ++i)
        if (i != axis) c.push_back(pts[j][i]);
      members.emplace_back(std::move(c));
    }
    for (std::size_t i = 0; i + 1 < d; ++i) {
      Coord lo = members.front()[i];
      for (const auto& m : members) lo = std::min(lo, m[i]);
      for (auto& m : members) m[i] -= lo;
    }
    out.sizes.push_back(members.size());
    out.slices.push_back(Slice{axis, level, LowerSet::from_points(d - 1, std::move(members))});
  }
  return out;
}

}  // namespace lowerset
