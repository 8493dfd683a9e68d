#pragma once

#include <cstdint>
#include <vector>

#include "augsimp/sset.hpp"

namespace augsimp {

struct CorpusEntry {
  int ambient;
  std::vector<std::vector<int>> generators;
  AugSSet complex;
};

// Random subcomplexes of Γ₊[n] with n drawn uniformly from [min_n, max_n].
// Each one is generated by 1..4 random vertex subsets; deterministic per seed.
std::vector<CorpusEntry> random_subcomplexes(std::size_t count, int min_n, int max_n, std::uint64_t seed);

}  // namespace augsimp
