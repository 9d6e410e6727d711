#include "lowerset/torus.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

namespace lowerset::disc {

PointSetTorus::PointSetTorus(std::size_t dim, std::vector<double> coords,
                             std::optional<std::uint64_t> seed)
    : dim_(dim), coords_(std::move(coords)), seed_(seed) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
  if (coords_.empty() || coords_.size() % dim_ != 0)
    throw std::invalid_argument("point set needs m >= 1 complete points");
  for (double c : coords_)
    if (!(c >= 0.0 && c < 1.0)) throw std::invalid_argument("torus coordinates must lie in [0,1)");
}

PointSetTorus sample_points(std::size_t d, std::size_t m, std::uint64_t seed) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  std::mt19937_64 rng(seed);
  std::vector<double> coords(d * m);
  for (auto& c : coords) c = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return PointSetTorus(d, std::move(coords), seed);
}

PointSetTorus tensor_grid(std::size_t d, std::span<const std::size_t> per_axis) {
  if (per_axis.size() != d) throw std::invalid_argument("need one grid size per axis");
  std::size_t m = 1;
  for (auto s : per_axis) {
    if (s == 0) throw std::invalid_argument("grid sizes must be positive");
    m *= s;
  }
  std::vector<double> coords(d * m);
  std::vector<std::size_t> idx(d, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t a = 0; a < d; ++a)
      coords[i * d + a] = static_cast<double>(idx[a]) / static_cast<double>(per_axis[a]);
    for (std::size_t a = d; a-- > 0;) {
      if (++idx[a] < per_axis[a]) break;
      idx[a] = 0;
    }
  }
  return PointSetTorus(d, std::move(coords));
}

PointSetTorus kronecker_points(std::size_t d, std::size_t m) {
  if (m == 0) throw std::invalid_argument("m must be positive");
  double phi = 2.0;
  for (int it = 0; it < 64; ++it) phi = std::pow(1.0 + phi, 1.0 / static_cast<double>(d + 1));
  std::vector<double> alpha(d);
  for (std::size_t j = 0; j < d; ++j) alpha[j] = std::pow(phi, -static_cast<double>(j + 1));
  std::vector<double> coords(d * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const double v = 0.5 + static_cast<double>(i) * alpha[j];
      coords[i * d + j] = v - std::floor(v);
    }
  return PointSetTorus(d, std::move(coords));
}

void write_points_csv(std::ostream& os, const PointSetTorus& xs) {
  for (std::size_t a = 0; a < xs.dim(); ++a) os << (a ? ",x" : "x") << a + 1;
  os << '\n';
  char buf[32];
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto p = xs[i];
    for (std::size_t a = 0; a < p.size(); ++a) {
      std::snprintf(buf, sizeof buf, "%.17g", p[a]);
      os << (a ? "," : "") << buf;
    }
    os << '\n';
  }
}

PointSetTorus read_points_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty point file");
  std::size_t d = 1;
  for (char c : line) d += c == ',';
  std::vector<double> coords;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::stringstream row(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(row, cell, ',')) {
      coords.push_back(std::stod(cell));
      ++cols;
    }
    if (cols != d) throw std::invalid_argument("ragged point file");
  }
  return PointSetTorus(d, std::move(coords));
}

}  // namespace lowerset::disc
