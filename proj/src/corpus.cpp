#include "augsimp/corpus.hpp"

#include <random>

namespace augsimp {

std::vector<CorpusEntry> random_subcomplexes(std::size_t count, int min_n, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick_n(min_n, max_n);
  std::uniform_int_distribution<int> pick_count(1, 4);
  std::vector<CorpusEntry> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const int n = pick_n(rng);
    std::vector<std::vector<int>> gens;
    if (n >= 0) {
      std::uniform_int_distribution<VertexSet> pick_set(1, (VertexSet{1} << (n + 1)) - 1);
      const int g = pick_count(rng);
      for (int i = 0; i < g; ++i) gens.push_back(vertices_of(pick_set(rng)));
    }
    out.push_back({n, gens, subcomplex_of_gamma(n, gens)});
  }
  return out;
}

}  // namespace augsimp
