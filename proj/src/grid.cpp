#include "rouquier/grid.hpp"

#include <random>

namespace rouquier {

std::vector<std::vector<int>> seeded_weight_draws(int d, int count, std::uint32_t seed, int lo,
                                                  int hi) {
  // mt19937 output is fixed by the standard; the reduction below avoids the
  // implementation-defined distributions.
  std::mt19937 rng(seed);
  const auto span = static_cast<std::uint32_t>(hi - lo + 1);
  std::vector<std::vector<int>> out(count, std::vector<int>(d));
  for (auto& w : out)
    for (auto& x : w) x = lo + static_cast<int>(rng() % span);
  return out;
}

std::vector<std::vector<int>> grid_weight_sets(int d, int draws) {
  std::vector<std::vector<int>> sets;
  std::vector<int> spetsial(d, 0);
  spetsial[0] = 1;
  sets.push_back(spetsial);
  sets.emplace_back(d, 0);
  for (auto& w : seeded_weight_draws(d, draws, 20240601u + static_cast<std::uint32_t>(d)))
    sets.push_back(std::move(w));
  return sets;
}

std::vector<Specialization> standard_grid() {
  std::vector<Specialization> grid;
  for (int d : {1, 2, 3, 4, 6})
    for (int r = 1; r <= 4; ++r)
      for (int n = 0; n <= 2; ++n)
        for (const auto& m : grid_weight_sets(d)) grid.emplace_back(d, r, m, n);
  return grid;
}

}  // namespace rouquier
