#pragma once

#include <cstddef>
#include <vector>

#include "lowerset/lower_set.hpp"

namespace lowerset {

/// One removed hyperplane {x_axis = level}. `points` is the slice with the
/// axis dropped and each remaining coordinate shifted down to start at 0.
struct Slice {
  std::size_t axis;
  Coord level;
  LowerSet points;
};

struct SliceDecomposition {
  std::vector<std::size_t> sizes;
  std::vector<Slice> slices;
};

/// Greedy hyperplane peeling: repeatedly remove the coordinate hyperplane
/// holding the most remaining points (ties: lowest axis, then lowest level).
/// Sizes are non-increasing and sum to |q|. Requires q non-empty, dim >= 2.
SliceDecomposition slice_decompose(const LowerSet& q);

}  // namespace lowerset
