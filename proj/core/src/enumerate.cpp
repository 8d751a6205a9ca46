#include <map>
#include <string>

#include "k2t/canonical.hpp"
#include "k2t/errors.hpp"
#include "k2t/search.hpp"

namespace k2t {

std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only) {
  if (n == 0) throw DomainError("enumerate_graphs: need n >= 1");
  if (n > kGeneratorMaxOrder) {
    throw CapabilityError("built-in generator stops at n = " + std::to_string(kGeneratorMaxOrder) +
                          "; pipe larger orders in as graph6");
  }
  std::vector<Graph> level{Graph(1)};
  for (std::size_t order = 2; order <= n; ++order) {
    std::map<CanonicalCode, Graph> next;
    const std::uint32_t subsets = 1U << (order - 1);
    for (const Graph& base : level) {
      for (std::uint32_t mask = connected_only ? 1 : 0; mask < subsets; ++mask) {
        Graph g = disjoint_union(base, Graph(1));
        const auto fresh = static_cast<VertexId>(order - 1);
        for (VertexId v = 0; v < fresh; ++v)
          if (mask >> v & 1U) g.add_edge(v, fresh);
        const CanonicalCode code = canonical_code(g);
        if (!next.contains(code)) next.emplace(code, graph_from_code(code));
      }
    }
    level.clear();
    for (auto& [code, g] : next) level.push_back(std::move(g));
  }
  return level;
}

std::vector<Graph> enumerate_connected(std::size_t n) { return enumerate_graphs(n, true); }

}  // namespace k2t
