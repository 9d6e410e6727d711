#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

namespace lowerset {

using Coord = std::uint32_t;

/// A multi-index in Z_+^d. Ordering is lexicographic on the coordinates.
class Point {
 public:
  Point() = default;
  explicit Point(std::vector<Coord> coords) : coords_(std::move(coords)) {}
  Point(std::initializer_list<Coord> coords) : coords_(coords) {}

  /// The origin of Z_+^d.
  static Point zero(std::size_t dim) { return Point(std::vector<Coord>(dim, 0)); }
  /// m * e_axis.
  static Point on_axis(std::size_t dim, std::size_t axis, Coord m) {
    Point p = zero(dim);
    p.coords_[axis] = m;
    return p;
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  Coord operator[](std::size_t i) const { return coords_[i]; }
  Coord& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Coord>& coords() const noexcept { return coords_; }

  /// Sum of the coordinates.
  std::uint64_t degree() const noexcept {
    std::uint64_t s = 0;
    for (Coord c : coords_) s += c;
    return s;
  }

  Point shifted(std::size_t axis, int delta) const {
    Point p = *this;
    p.coords_[axis] = static_cast<Coord>(static_cast<std::int64_t>(p.coords_[axis]) + delta);
    return p;
  }

  /// Componentwise q <= *this.
  bool dominates(const Point& q) const noexcept {
    for (std::size_t i = 0; i < coords_.size(); ++i)
      if (q.coords_[i] > coords_[i]) return false;
    return true;
  }

  friend auto operator<=>(const Point&, const Point&) = default;
  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<Coord> coords_;
};

inline std::ostream& operator<<(std::ostream& os, const Point& p) {
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? "," : "") << p[i];
  return os << ')';
}

}  // namespace lowerset
