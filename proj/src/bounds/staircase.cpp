#include "lowerset/staircase.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace lowerset::bounds {

namespace {

// All points of Z_+^d with coordinate sum at most m, lex order.
void simplex_points(std::size_t d, std::vector<Coord>& cur, std::size_t budget,
                    std::vector<Point>& out) {
  if (cur.size() == d) {
    out.emplace_back(cur);
    return;
  }
  for (std::size_t v = 0; v <= budget; ++v) {
    cur.push_back(static_cast<Coord>(v));
    simplex_points(d, cur, budget - v, out);
    cur.pop_back();
  }
}

}  // namespace

StaircaseNumbers staircase_numbers(std::size_t d, std::size_t m) {
  if (d == 0) throw std::invalid_argument("staircase_numbers needs d >= 1");
  StaircaseNumbers s{m, binomial(m + d - 1, d - 1), binomial(m + d, d)};
  assert(s.b_m * d == s.a_m * (m + d));
  return s;
}

std::size_t choose_m(std::size_t d, std::size_t n) {
  if (d < 2 || n < 2) throw std::invalid_argument("choose_m needs d >= 2, n >= 2");
  std::size_t m = 0;
  while (staircase_numbers(d, m + 1).b_m < n) ++m;
  return m;
}

LogValue eq_a_lower_bound(std::size_t d, std::size_t n) {
  const auto a = staircase_numbers(d, choose_m(d, n)).a_m;
  return {std::log(static_cast<long double>(d) / 2.0L) +
          static_cast<long double>(a.get_d()) * std::numbers::ln2_v<long double>};
}

std::vector<Point> corner_layer(std::size_t d, std::size_t m) {
  std::vector<Point> out;
  std::vector<Coord> cur;
  // Fill all but the last coordinate; the last one takes what is left.
  auto fill = [&](auto& self, std::size_t left) -> void {
    if (cur.size() + 1 == d) {
      cur.push_back(static_cast<Coord>(left));
      out.emplace_back(cur);
      cur.pop_back();
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      cur.push_back(static_cast<Coord>(v));
      self(self, left - v);
      cur.pop_back();
    }
  };
  fill(fill, m);
  return out;
}

LowerSet build_staircase_family(std::size_t d, std::size_t n, std::span<const Point> kept_corners,
                                std::size_t axis) {
  if (axis >= d) throw std::invalid_argument("axis out of range");
  const std::size_t m = choose_m(d, n);
  const Point anchor = Point::on_axis(d, axis, static_cast<Coord>(m));
  for (const auto& c : kept_corners)
    if (c.dim() != d || c.degree() != m) throw std::invalid_argument("selector is not a subset of the corner layer");
  if (std::find(kept_corners.begin(), kept_corners.end(), anchor) == kept_corners.end())
    throw std::invalid_argument("selector must keep the axis corner");

  std::vector<Point> pts;
  std::vector<Coord> cur;
  simplex_points(d, cur, m, pts);
  std::erase_if(pts, [&](const Point& p) {
    return p.degree() == m &&
           std::find(kept_corners.begin(), kept_corners.end(), p) == kept_corners.end();
  });
  assert(pts.size() < n);
  for (Coord step = 1; pts.size() < n; ++step)
    pts.push_back(Point::on_axis(d, axis, static_cast<Coord>(m) + step));
  auto q = LowerSet::from_points(d, std::move(pts));
  assert(q.size() == n);
  return q;
}

}  // namespace lowerset::bounds
