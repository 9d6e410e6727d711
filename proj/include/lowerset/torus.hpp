#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

namespace lowerset::disc {

/// m points on the torus [0,1)^d, stored row-major.
class PointSetTorus {
 public:
  PointSetTorus(std::size_t dim, std::vector<double> coords, std::optional<std::uint64_t> seed = {});

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return coords_.size() / dim_; }
  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  const std::vector<double>& coords() const noexcept { return coords_; }
  /// Root seed when the set came from sample_points.
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  friend bool operator==(const PointSetTorus& a, const PointSetTorus& b) {
    return a.dim_ == b.dim_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  std::optional<std::uint64_t> seed_;
};

/// m i.i.d. uniform points from a seeded mt19937_64 (53-bit mantissas).
PointSetTorus sample_points(std::size_t d, std::size_t m, std::uint64_t seed);

/// Product grid {j / s_a : 0 <= j < s_a} over the axes, last axis fastest.
PointSetTorus tensor_grid(std::size_t d, std::span<const std::size_t> per_axis);

/// Deterministic Kronecker points frac(1/2 + i * alpha), alpha_j = phi_d^{-(j+1)}
/// with phi_d the positive root of x^{d+1} = x + 1.
PointSetTorus kronecker_points(std::size_t d, std::size_t m);

/// Header "x1,...,xd", then one point per row at full double precision.
void write_points_csv(std::ostream& os, const PointSetTorus& xs);
PointSetTorus read_points_csv(std::istream& is);

}  // namespace lowerset::disc
