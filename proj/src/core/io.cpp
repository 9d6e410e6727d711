#include "lowerset/io.hpp"

#include <json.hpp>

namespace lowerset {

std::string to_json_line(const LowerSet& q) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : q) arr.push_back(p.coords());
  return arr.dump();
}

LowerSet parse_lower_set(std::string_view line, std::size_t dim) {
  nlohmann::json arr;
  try {
    arr = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed lower set: ") + e.what());
  }
  if (!arr.is_array()) throw std::invalid_argument("malformed lower set: expected an array");
  std::vector<Point> pts;
  for (const auto& p : arr) {
    if (!p.is_array()) throw std::invalid_argument("malformed lower set: expected coordinate arrays");
    std::vector<Coord> c;
    for (const auto& v : p) {
      if (!v.is_number_unsigned()) throw std::invalid_argument("coordinates must be non-negative integers");
      c.push_back(v.get<Coord>());
    }
    pts.emplace_back(std::move(c));
  }
  return LowerSet::from_points(dim, std::move(pts));
}

}  // namespace lowerset
