#include "k2t/extremal.hpp"

#include <algorithm>
#include <string>

#include "k2t/errors.hpp"

namespace k2t {

FtParams split_params(std::int64_t t, std::int64_t n) {
  if (t < 2) throw DomainError("split_params: need t >= 2, got " + std::to_string(t));
  if (n <= t) throw DomainError("split_params: need n >= t+1, got n=" + std::to_string(n));
  FtParams f{t, n, (n - 1) / t, (n - 1) % t};
  return f;
}

Graph build_F(std::int64_t t, std::int64_t n) {
  const FtParams f = split_params(t, n);
  if (static_cast<std::size_t>(n) > Graph::kMaxOrder) throw CapabilityError("build_F: order exceeds cap");
  Graph g(static_cast<std::size_t>(n));
  for (VertexId v = 1; v < g.order(); ++v) g.add_edge(0, v);
  auto add_clique = [&g](VertexId first, std::int64_t size) {
    for (VertexId a = first; a < first + size; ++a)
      for (VertexId b = a + 1; b < first + size; ++b) g.add_edge(a, b);
  };
  for (std::int64_t b = 0; b < f.p; ++b) add_clique(static_cast<VertexId>(1 + b * t), t);
  if (f.s > 0) add_clique(static_cast<VertexId>(1 + f.p * t), f.s);
  return g;
}

bool is_Ft(const Graph& g, std::int64_t t) {
  const auto n = static_cast<std::int64_t>(g.order());
  if (t < 2 || n < t + 1) return false;
  const auto hub = dominating_vertex(g);
  if (!hub) return false;
  // Any two dominating vertices are swapped by an automorphism, so testing
  // one suffices.
  const FtParams f = split_params(t, n);
  const Graph rest = remove_vertex(g, *hub);

  std::int64_t full_blocks = 0;
  std::int64_t partial_blocks = 0;
  for (const auto& comp : components(rest)) {
    const auto size = static_cast<std::int64_t>(comp.size());
    const Graph c = induced_subgraph(rest, comp);
    if (c.size() != static_cast<std::size_t>(size * (size - 1) / 2)) return false;
    if (size == t) {
      ++full_blocks;
    } else if (size == f.s) {
      ++partial_blocks;
    } else {
      return false;
    }
  }
  return full_blocks == f.p && partial_blocks == (f.s > 0 ? 1 : 0);
}

}  // namespace k2t
