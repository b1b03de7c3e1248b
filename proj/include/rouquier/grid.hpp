#pragma once

#include <cstdint>
#include <vector>

#include "rouquier/hyperplanes.hpp"

namespace rouquier {

/// Reproducible pseudo-random weight vectors in [lo, hi]^d.
std::vector<std::vector<int>> seeded_weight_draws(int d, int count, std::uint32_t seed,
                                                  int lo = -5, int hi = 5);

/// Weight sets used for a given d: spetsial, all-zero, then `draws` seeded
/// draws in [-5, 5]^d.
std::vector<std::vector<int>> grid_weight_sets(int d, int draws = 10);

/// d in {1,2,3,4,6}, 1 <= r <= 4, n in {0,1,2}, weights from grid_weight_sets.
std::vector<Specialization> standard_grid();

}  // namespace rouquier
