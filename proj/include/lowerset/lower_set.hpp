#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "lowerset/point.hpp"

namespace lowerset {

/// A finite downward-closed subset of Z_+^d, stored lex-sorted.
///
/// Two lower sets compare equal iff their sorted point sequences are equal,
/// so the lex-sorted listing is also the canonical serialization.
class LowerSet {
 public:
  explicit LowerSet(std::size_t dim = 1) : dim_(dim) {
    if (dim == 0) throw std::invalid_argument("dimension must be positive");
  }

  /// Validates closure and canonicalizes the order. Throws std::invalid_argument
  /// if the points are not downward closed or have mixed dimensions.
  static LowerSet from_points(std::size_t dim, std::vector<Point> points);

  /// Trusts the caller: `points` must already be lex-sorted and downward closed.
  static LowerSet from_sorted_unchecked(std::size_t dim, std::vector<Point> points) {
    LowerSet q(dim);
    q.points_ = std::move(points);
    return q;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const std::vector<Point>& points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  /// Binary search in the sorted listing.
  bool contains(const Point& p) const;

  friend bool operator==(const LowerSet&, const LowerSet&) = default;
  friend auto operator<=>(const LowerSet& a, const LowerSet& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    return a.points_ <=> b.points_;
  }

 private:
  std::size_t dim_;
  std::vector<Point> points_;
};

/// True iff `pts` is downward closed in Z_+^dim.
/// Throws std::invalid_argument("inconsistent dimension") on a dimension mismatch.
bool is_lower_set(std::size_t dim, std::span<const Point> pts);

/// Points p outside q such that q with p added is still a lower set, lex-sorted.
std::vector<Point> addable_points(const LowerSet& q);

/// Maximal elements of q, lex-sorted. Throws on an empty set.
std::vector<Point> corners(const LowerSet& q);

}  // namespace lowerset
