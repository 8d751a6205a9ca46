#include <algorithm>
#include <string>

#include "k2t/errors.hpp"
#include "k2t/minor.hpp"

namespace k2t {

namespace {

// Injective map of pattern vertices onto host vertices carrying every
// pattern edge onto a host edge.
bool embeds(const Graph& pattern, const Graph& host, std::vector<VertexId>& image, std::vector<char>& used,
            std::size_t next) {
  if (next == pattern.order()) return true;
  const auto pv = static_cast<VertexId>(next);
  for (VertexId hv = 0; hv < host.order(); ++hv) {
    if (used[hv] || host.degree(hv) < pattern.degree(pv)) continue;
    bool ok = true;
    for (VertexId prev = 0; prev < pv && ok; ++prev)
      if (pattern.has_edge(prev, pv) && !host.has_edge(image[prev], hv)) ok = false;
    if (!ok) continue;
    used[hv] = 1;
    image[pv] = hv;
    if (embeds(pattern, host, image, used, next + 1)) return true;
    used[hv] = 0;
  }
  return false;
}

}  // namespace

MinorOracle::MinorOracle(Graph pattern) : pattern_(std::move(pattern)), pattern_edges_(pattern_.size()) {
  if (pattern_.order() > kOracleMaxOrder) {
    throw CapabilityError("oracle pattern larger than " + std::to_string(kOracleMaxOrder));
  }
}

bool MinorOracle::contains(const Graph& g) {
  if (g.order() > kOracleMaxOrder) {
    throw CapabilityError("has_minor_oracle supports host order <= " + std::to_string(kOracleMaxOrder));
  }
  return recurse(g);
}

bool MinorOracle::spans_pattern(const Graph& g) const {
  std::vector<VertexId> image(pattern_.order(), 0);
  std::vector<char> used(g.order(), 0);
  return embeds(pattern_, g, image, used, 0);
}

bool MinorOracle::recurse(const Graph& g) {
  if (g.order() < pattern_.order() || g.size() < pattern_edges_) return false;
  const CanonicalCode key = canonical_code(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool found = spans_pattern(g);
  if (!found && g.order() > pattern_.order()) {
    for (VertexId v = 0; v < g.order() && !found; ++v) found = recurse(remove_vertex(g, v));
    for (const Edge& e : g.edges()) {
      if (found) break;
      found = recurse(contract_edge(g, e.u, e.v));
    }
  }
  memo_.emplace(key, found);
  return found;
}

bool has_minor_oracle(const Graph& g, const Graph& h) { return MinorOracle(h).contains(g); }

}  // namespace k2t
