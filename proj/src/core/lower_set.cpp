#include "lowerset/lower_set.hpp"

#include <algorithm>
#include <set>

namespace lowerset {

namespace {

void check_dims(std::size_t dim, std::span<const Point> pts) {
  for (const auto& p : pts)
    if (p.dim() != dim) throw std::invalid_argument("inconsistent dimension");
}

// All immediate predecessors p - e_i present in the sorted range.
bool predecessors_present(const Point& p, std::span<const Point> sorted) {
  for (std::size_t i = 0; i < p.dim(); ++i) {
    if (p[i] == 0) continue;
    if (!std::binary_search(sorted.begin(), sorted.end(), p.shifted(i, -1))) return false;
  }
  return true;
}

}  // namespace

LowerSet LowerSet::from_points(std::size_t dim, std::vector<Point> points) {
  check_dims(dim, points);
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const auto& p : points)
    if (!predecessors_present(p, points)) throw std::invalid_argument("not a lower set");
  return from_sorted_unchecked(dim, std::move(points));
}

bool LowerSet::contains(const Point& p) const {
  return std::binary_search(points_.begin(), points_.end(), p);
}

bool is_lower_set(std::size_t dim, std::span<const Point> pts) {
  check_dims(dim, pts);
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end());
  // Closure under immediate predecessors implies closure under the whole box.
  return std::all_of(sorted.begin(), sorted.end(),
                     [&](const Point& p) { return predecessors_present(p, sorted); });
}

std::vector<Point> addable_points(const LowerSet& q) {
  if (q.empty()) return {Point::zero(q.dim())};
  std::set<Point> out;
  for (const auto& p : q) {
    for (std::size_t i = 0; i < q.dim(); ++i) {
      Point c = p.shifted(i, +1);
      if (!q.contains(c) && predecessors_present(c, q.points())) out.insert(std::move(c));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<Point> corners(const LowerSet& q) {
  if (q.empty()) throw std::invalid_argument("empty set has no corners");
  std::vector<Point> out;
  for (const auto& p : q) {
    bool maximal = true;
    for (std::size_t i = 0; i < q.dim() && maximal; ++i) maximal = !q.contains(p.shifted(i, +1));
    if (maximal) out.push_back(p);
  }
  return out;
}

}  // namespace lowerset
