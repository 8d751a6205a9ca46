#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace k2t {

using VertexId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;
  bool operator==(const Edge&) const = default;
};

/// Simple undirected graph stored as n adjacency bit rows.
///
/// Rows are symmetric and irreflexive after every mutation. The class is a
/// plain value type: copies are deep, comparison is labeled equality.
class Graph {
 public:
  static constexpr std::size_t kMaxOrder = std::size_t{1} << 16;

  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept;  // number of edges

  bool has_edge(VertexId u, VertexId v) const;
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  std::size_t degree(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<Edge> edges() const;  // u < v, sorted lexicographically

  /// Raw adjacency words of row v; bit (w % 64) of word (w / 64) is edge v-w.
  std::span<const std::uint64_t> row(VertexId v) const;
  std::size_t words_per_row() const noexcept { return words_; }

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(VertexId v) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

enum class Family { complete, path, cycle, star, empty };

/// Standard labeled family member on k vertices. Paths run 0-1-...-(k-1),
/// cycles close k-1 back to 0, stars are centered at 0.
Graph build_named(Family kind, std::size_t k);

inline Graph complete_graph(std::size_t k) { return build_named(Family::complete, k); }
inline Graph path_graph(std::size_t k) { return build_named(Family::path, k); }
inline Graph cycle_graph(std::size_t k) { return build_named(Family::cycle, k); }
inline Graph star_graph(std::size_t k) { return build_named(Family::star, k); }
inline Graph empty_graph(std::size_t k) { return build_named(Family::empty, k); }

/// Complete bipartite K_{a,b}: part A is 0..a-1, part B is a..a+b-1.
Graph complete_bipartite(std::size_t a, std::size_t b);

/// g's vertices keep their labels, h's are shifted by g.order().
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

/// Merges v into u (or u into v) keeping the smaller label; labels above the
/// removed one shift down by one.
Graph contract_edge(const Graph& g, VertexId u, VertexId v);

Graph remove_vertex(const Graph& g, VertexId v);

/// Subgraph induced by `vertices`, relabeled in the order given.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices);

/// Connected components, each sorted ascending, ordered by minimum vertex.
std::vector<std::vector<VertexId>> components(const Graph& g);
bool is_connected(const Graph& g);

/// Maximal 2-connected pieces (bridges count as K2 blocks). Isolated
/// vertices form no block. Each block is sorted; blocks ordered by min vertex.
std::vector<std::vector<VertexId>> biconnected_blocks(const Graph& g);
bool is_biconnected(const Graph& g);

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v);

/// Largest |Γ(u) ∩ Γ(v)| over unordered pairs u != v; 0 when n < 2.
std::size_t max_common_neighbors(const Graph& g);

/// Vertex of maximum degree, ties to the lowest index. Requires n >= 1.
VertexId max_degree_vertex(const Graph& g);

/// Lowest-index vertex adjacent to all others, if any.
std::optional<VertexId> dominating_vertex(const Graph& g);

Graph relabel(const Graph& g, std::span<const VertexId> perm);  // new[perm[v]] = old[v]

}  // namespace k2t
