#pragma once

// Test-only oracles. None of these use the growth-tree kernel.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <set>
#include <vector>

#include "lowerset/lower_set.hpp"

namespace lowerset::testing {

/// Points of the box {0..side-1}^d in lex order.
inline std::vector<Point> box_points(std::size_t d, std::size_t side) {
  std::vector<Point> out;
  std::vector<Coord> cur(d, 0);
  if (side == 0) return out;
  for (;;) {
    out.emplace_back(cur);
    std::size_t a = d;
    while (a-- > 0) {
      if (++cur[a] < side) break;
      cur[a] = 0;
    }
    if (a == static_cast<std::size_t>(-1)) break;
  }
  return out;
}

/// Filters every n-subset of the box {0..n-1}^d through is_lower_set. Box
/// points are decided in lex order, and an in-decision for a point whose
/// immediate predecessor was already decided out is skipped: no completion
/// of such a branch can pass the filter. Each survivor is still re-checked.
inline std::vector<LowerSet> box_filter(std::size_t d, std::size_t n) {
  if (n == 0) return {LowerSet(d)};
  const auto box = box_points(d, n);
  std::vector<LowerSet> out;
  std::vector<Point> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (chosen.size() == n) {
      if (is_lower_set(d, chosen)) out.push_back(LowerSet::from_points(d, chosen));
      return;
    }
    if (box.size() - idx < n - chosen.size()) return;
    const Point& p = box[idx];
    bool may_include = true;
    for (std::size_t i = 0; i < d && may_include; ++i)
      if (p[i] > 0) may_include = std::binary_search(chosen.begin(), chosen.end(), p.shifted(i, -1));
    if (may_include) {
      chosen.push_back(p);
      rec(idx + 1);
      chosen.pop_back();
    }
    rec(idx + 1);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Literal filter over all C(|box|, n) subsets, no pruning. Tiny cases only.
inline std::vector<LowerSet> subset_filter(std::size_t d, std::size_t n, std::size_t side) {
  const auto box = box_points(d, side);
  std::vector<LowerSet> out;
  if (n > box.size()) return out;
  std::vector<bool> mask(box.size(), false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < box.size(); ++i)
      if (mask[i]) pts.push_back(box[i]);
    if (is_lower_set(d, pts)) out.push_back(LowerSet::from_points(d, pts));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  std::sort(out.begin(), out.end());
  return out;
}

/// L_d(n) built level by level from L_d(n-1) by adding one addable point and
/// deduplicating the results.
inline std::vector<LowerSet> closure_levels(std::size_t d, std::size_t n) {
  std::set<LowerSet> level{LowerSet(d)};
  for (std::size_t k = 0; k < n; ++k) {
    std::set<LowerSet> next;
    for (const auto& q : level)
      for (const auto& p : addable_points(q)) {
        auto pts = q.points();
        pts.push_back(p);
        next.insert(LowerSet::from_points(d, std::move(pts)));
      }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

}  // namespace lowerset::testing
