#include "k2t/canonical.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "k2t/errors.hpp"

namespace k2t {

namespace {

std::size_t pair_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Position of pair (i<j) in graph6 order.
std::size_t pair_index(std::size_t i, std::size_t j) { return j * (j - 1) / 2 + i; }

std::vector<int> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<int> color(n);
  for (VertexId v = 0; v < n; ++v) color[v] = static_cast<int>(g.degree(v));

  std::vector<std::vector<VertexId>> adj(n);
  for (VertexId v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (VertexId v = 0; v < n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<int> nb;
      for (VertexId w : adj[v]) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::map<std::vector<int>, int> rank;
    for (auto& s : sig) rank.emplace(s, 0);
    int r = 0;
    for (auto& [s, id] : rank) id = r++;
    for (VertexId v = 0; v < n; ++v) color[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return color;
}

struct Search {
  const Graph& g;
  std::size_t n;
  std::size_t total_bits;
  std::vector<std::vector<VertexId>> cell_of_position;
  std::vector<VertexId> placed;  // placed[position] = original vertex
  std::vector<char> used;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<VertexId> best_perm;

  // Bits contributed by column j given positions 0..j, shifted into place.
  std::uint64_t column_bits(std::size_t j) const {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (g.has_edge(placed[i], placed[j]))
        bits |= std::uint64_t{1} << (total_bits - 1 - pair_index(i, j));
    }
    return bits;
  }

  std::uint64_t prefix_mask(std::size_t j) const {
    // Mask covering the bits of columns 1..j.
    const std::size_t covered = pair_count(j + 1);
    if (covered == 0) return 0;
    return (~std::uint64_t{0} << (total_bits - covered)) &
           (total_bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << total_bits) - 1));
  }

  void run(std::size_t pos, std::uint64_t partial) {
    if (pos == n) {
      if (partial < best) {
        best = partial;
        best_perm = placed;
      }
      return;
    }
    for (VertexId v : cell_of_position[pos]) {
      if (used[v]) continue;
      used[v] = 1;
      placed[pos] = v;
      std::uint64_t next = partial | column_bits(pos);
      const std::uint64_t mask = prefix_mask(pos);
      if (best == ~std::uint64_t{0} || (next & mask) <= (best & mask)) run(pos + 1, next);
      used[v] = 0;
    }
  }
};

std::pair<CanonicalCode, std::vector<VertexId>> canonicalize(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCanonicalMaxOrder) {
    throw CapabilityError("canonical form supports n <= " + std::to_string(kCanonicalMaxOrder));
  }
  if (n == 0) return {CanonicalCode{0, 0}, {}};

  auto color = refine_colors(g);
  std::vector<VertexId> order(n);
  for (VertexId v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](VertexId a, VertexId b) { return color[a] < color[b]; });

  Search s{g, n, pair_count(n), {}, std::vector<VertexId>(n), std::vector<char>(n, 0), ~std::uint64_t{0}, {}};
  s.cell_of_position.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (VertexId v : order)
      if (color[v] == color[order[pos]]) s.cell_of_position[pos].push_back(v);
  }
  s.run(0, 0);
  return {CanonicalCode{static_cast<std::uint8_t>(n), s.best}, s.best_perm};
}

}  // namespace

CanonicalCode canonical_code(const Graph& g) { return canonicalize(g).first; }

Graph canonical_form(const Graph& g) {
  auto [code, placed] = canonicalize(g);
  std::vector<VertexId> perm(g.order());
  for (std::size_t pos = 0; pos < placed.size(); ++pos) perm[placed[pos]] = static_cast<VertexId>(pos);
  return relabel(g, perm);
}

Graph graph_from_code(const CanonicalCode& code) {
  const std::size_t n = code.n;
  const std::size_t total = pair_count(n);
  Graph g(n);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if ((code.bits >> (total - 1 - pair_index(i, j))) & 1U)
        g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
  return g;
}

}  // namespace k2t
