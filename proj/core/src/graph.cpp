#include "k2t/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "k2t/errors.hpp"

namespace k2t {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_(words_for(n)) {
  if (n > kMaxOrder) {
    throw CapabilityError("graph order " + std::to_string(n) + " exceeds cap " +
                          std::to_string(kMaxOrder));
  }
  bits_.assign(n_ * words_, 0);
}

void Graph::check_vertex(VertexId v) const {
  if (v >= n_) {
    throw PreconditionError("vertex " + std::to_string(v) + " out of range for n=" +
                            std::to_string(n_));
  }
}

std::size_t Graph::size() const noexcept {
  std::size_t total = 0;
  for (auto w : bits_) total += static_cast<std::size_t>(std::popcount(w));
  return total / 2;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return (bits_[u * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
}

void Graph::add_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop " + std::to_string(u));
  bits_[u * words_ + v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  bits_[v * words_ + u / kWordBits] |= std::uint64_t{1} << (u % kWordBits);
}

void Graph::remove_edge(VertexId u, VertexId v) {
  check_vertex(u);
  check_vertex(v);
  bits_[u * words_ + v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  bits_[v * words_ + u / kWordBits] &= ~(std::uint64_t{1} << (u % kWordBits));
}

std::size_t Graph::degree(VertexId v) const {
  std::size_t d = 0;
  for (auto w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
  return d;
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  auto r = row(v);
  for (std::size_t wi = 0; wi < r.size(); ++wi) {
    for (std::uint64_t w = r[wi]; w != 0; w &= w - 1) {
      out.push_back(static_cast<VertexId>(wi * kWordBits + std::countr_zero(w)));
    }
  }
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (VertexId u = 0; u < n_; ++u) {
    for (VertexId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

std::span<const std::uint64_t> Graph::row(VertexId v) const {
  check_vertex(v);
  return {bits_.data() + v * words_, words_};
}

Graph build_named(Family kind, std::size_t k) {
  switch (kind) {
    case Family::empty:
      return Graph(k);
    case Family::complete: {
      if (k < 1) throw DomainError("complete graph needs k >= 1");
      Graph g(k);
      for (VertexId u = 0; u < k; ++u)
        for (VertexId v = u + 1; v < k; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::path: {
      if (k < 1) throw DomainError("path needs k >= 1");
      Graph g(k);
      for (VertexId v = 1; v < k; ++v) g.add_edge(v - 1, v);
      return g;
    }
    case Family::cycle: {
      if (k < 3) throw DomainError("cycle needs k >= 3");
      Graph g = build_named(Family::path, k);
      g.add_edge(static_cast<VertexId>(k - 1), 0);
      return g;
    }
    case Family::star: {
      if (k < 1) throw DomainError("star needs k >= 1");
      Graph g(k);
      for (VertexId v = 1; v < k; ++v) g.add_edge(0, v);
      return g;
    }
  }
  throw DomainError("unknown family");
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  return join(empty_graph(a), empty_graph(b));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t ng = g.order();
  if (ng + h.order() > Graph::kMaxOrder) throw CapabilityError("disjoint union too large");
  Graph out(ng + h.order());
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (auto [u, v] : h.edges())
    out.add_edge(static_cast<VertexId>(u + ng), static_cast<VertexId>(v + ng));
  return out;
}

Graph join(const Graph& g, const Graph& h) {
  Graph out = disjoint_union(g, h);
  const std::size_t ng = g.order();
  for (VertexId u = 0; u < ng; ++u)
    for (VertexId v = 0; v < h.order(); ++v) out.add_edge(u, static_cast<VertexId>(v + ng));
  return out;
}

Graph contract_edge(const Graph& g, VertexId u, VertexId v) {
  if (u == v || !g.has_edge(u, v)) {
    throw PreconditionError("contract_edge: {" + std::to_string(u) + "," + std::to_string(v) +
                            "} is not an edge");
  }
  const VertexId keep = std::min(u, v);
  const VertexId gone = std::max(u, v);
  auto shift = [gone](VertexId w) { return w > gone ? w - 1 : w; };

  Graph out(g.order() - 1);
  for (auto [a, b] : g.edges()) {
    VertexId x = a == gone ? keep : a;
    VertexId y = b == gone ? keep : b;
    if (x != y) out.add_edge(shift(x), shift(y));
  }
  return out;
}

Graph remove_vertex(const Graph& g, VertexId v) {
  if (v >= g.order()) throw PreconditionError("remove_vertex: out of range");
  std::vector<VertexId> keep;
  keep.reserve(g.order() - 1);
  for (VertexId w = 0; w < g.order(); ++w)
    if (w != v) keep.push_back(w);
  return induced_subgraph(g, keep);
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<std::int64_t> index(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.order() || index[vertices[i]] >= 0)
      throw PreconditionError("induced_subgraph: invalid or repeated vertex");
    index[vertices[i]] = static_cast<std::int64_t>(i);
  }
  Graph out(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      if (index[w] > static_cast<std::int64_t>(i))
        out.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(index[w]));
    }
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<VertexId> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::vector<std::vector<VertexId>> biconnected_blocks(const Graph& g) {
  // Iterative Hopcroft-Tarjan with an edge stack.
  const std::size_t n = g.order();
  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> disc(n, kUnvisited), low(n, 0), next(n, 0);
  std::vector<VertexId> parent(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<VertexId>> blocks;
  std::size_t timer = 0;

  auto pop_block = [&](VertexId u, VertexId v) {
    std::vector<VertexId> block;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      block.push_back(e.u);
      block.push_back(e.v);
      if ((e.u == u && e.v == v)) break;
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    blocks.push_back(std::move(block));
  };

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnvisited) continue;
    disc[root] = low[root] = timer++;
    parent[root] = root;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      VertexId u = stack.back();
      if (next[u] < adj[u].size()) {
        VertexId v = adj[u][next[u]++];
        if (disc[v] == kUnvisited) {
          parent[v] = u;
          disc[v] = low[v] = timer++;
          edge_stack.push_back({u, v});
          stack.push_back(v);
        } else if (v != parent[u] && disc[v] < disc[u]) {
          edge_stack.push_back({u, v});
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        if (u != root) {
          VertexId p = parent[u];
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) pop_block(p, u);
        }
      }
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return blocks;
}

bool is_biconnected(const Graph& g) {
  if (g.order() < 3) return false;
  auto blocks = biconnected_blocks(g);
  return blocks.size() == 1 && blocks.front().size() == g.order();
}

std::size_t common_neighbor_count(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw PreconditionError("common_neighbor_count: u == v");
  auto ru = g.row(u);
  auto rv = g.row(v);
  std::size_t c = 0;
  for (std::size_t i = 0; i < ru.size(); ++i)
    c += static_cast<std::size_t>(std::popcount(ru[i] & rv[i]));
  return c;
}

std::size_t max_common_neighbors(const Graph& g) {
  std::size_t best = 0;
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      best = std::max(best, common_neighbor_count(g, u, v));
  return best;
}

VertexId max_degree_vertex(const Graph& g) {
  if (g.order() == 0) throw PreconditionError("max_degree_vertex: empty graph");
  VertexId best = 0;
  std::size_t best_deg = g.degree(0);
  for (VertexId v = 1; v < g.order(); ++v) {
    std::size_t d = g.degree(v);
    if (d > best_deg) {
      best = v;
      best_deg = d;
    }
  }
  return best;
}

std::optional<VertexId> dominating_vertex(const Graph& g) {
  for (VertexId v = 0; v < g.order(); ++v)
    if (g.degree(v) + 1 == g.order()) return v;
  return std::nullopt;
}

Graph relabel(const Graph& g, std::span<const VertexId> perm) {
  if (perm.size() != g.order()) throw PreconditionError("relabel: permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace k2t
