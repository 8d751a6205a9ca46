#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "k2t/graph.hpp"

namespace k2t::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
  Graph g = random_graph(n, p, rng);
  for (VertexId v = 1; v < n; ++v) {
    const auto u = static_cast<VertexId>(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng));
    g.add_edge(u, v);
  }
  return g;
}

inline std::vector<VertexId> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph wheel(std::size_t rim) { return join(complete_graph(1), cycle_graph(rim)); }

}  // namespace k2t::testing
