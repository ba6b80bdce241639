#pragma once

#include <cstdint>

#include "planarflow/plane_graph.hpp"

namespace planarflow {

// Fixed 4-vertex instance used across tests: s=(0,0), a=(1,1), b=(1,-1),
// t=(2,0); edges sa:3 sb:2 at:2 bt:3 ab:1.
PlaneGraph make_diamond();

// m x m grid with integer capacities uniform in [cap_min, cap_max].
// corner_terminals: s = top-left vertex, t = bottom-right; otherwise a random
// distinct pair. Deterministic for a given seed.
PlaneGraph make_grid(int m, int cap_min, int cap_max, std::uint64_t seed,
                     bool corner_terminals = true);

// Delaunay triangulation of n random points in the unit square, integer
// capacities in [cap_min, cap_max]. extreme_terminals: s = leftmost point,
// t = rightmost; otherwise a random distinct pair.
PlaneGraph make_random_planar(int n, int cap_min, int cap_max, std::uint64_t seed,
                              bool extreme_terminals = true);

// Adds a random multiple of 0.25 (0..0.75) to every capacity.
PlaneGraph perturb_quarters(const PlaneGraph& g, std::uint64_t seed);

} // namespace planarflow
