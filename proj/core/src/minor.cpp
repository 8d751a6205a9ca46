#include "k2t/minor.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "k2t/errors.hpp"

namespace k2t {

namespace {

using Mask = std::uint64_t;

Mask bit(std::size_t v) { return Mask{1} << v; }
int count(Mask m) { return std::popcount(m); }
std::size_t lowest(Mask m) { return static_cast<std::size_t>(std::countr_zero(m)); }

// Search for a minor model of a fixed pattern inside one piece of at most
// 64 vertices, represented by adjacency masks.
//
// Pattern vertices are placed one at a time. A pattern vertex whose degree
// is at most 2 and whose neighbors are all placed before it only ever gets a
// single host vertex: any model can be rewritten so that holds, by moving
// all but one vertex of a shortest connecting path into an earlier
// neighbor's set. Twin pattern vertices (equal neighborhoods up to each
// other) with the same placement rule get increasing root vertices.
class BranchSetSearch {
 public:
  BranchSetSearch(std::vector<Mask> adj, const Graph& pattern)
      : adj_(std::move(adj)), n_(adj_.size()), hn_(pattern.order()) {
    hadj_.assign(hn_, 0);
    for (auto [a, b] : pattern.edges()) {
      hadj_[a] |= 1U << b;
      hadj_[b] |= 1U << a;
    }
    choose_order();
    set_.assign(hn_, 0);
    root_.assign(hn_, 0);
    placed_.assign(hn_, 0);
  }

  bool run() {
    const Mask all = n_ == 64 ? ~Mask{0} : (bit(n_) - 1);
    return place(0, all);
  }

  std::vector<Mask> sets() const { return set_; }

 private:
  void choose_order() {
    std::vector<char> taken(hn_, 0);
    rank_.assign(hn_, 0);
    for (std::size_t k = 0; k < hn_; ++k) {
      std::size_t best = hn_;
      for (std::size_t v = 0; v < hn_; ++v) {
        if (taken[v]) continue;
        if (best == hn_) {
          best = v;
          continue;
        }
        auto key = [&](std::size_t x) {
          int placed_nbrs = 0;
          for (std::size_t y = 0; y < hn_; ++y)
            if (taken[y] && (hadj_[x] >> y & 1U)) ++placed_nbrs;
          return std::pair{std::popcount(hadj_[x]), placed_nbrs};
        };
        if (key(v) > key(best)) best = v;
      }
      taken[best] = 1;
      rank_[best] = k;
      order_.push_back(best);
    }

    singleton_.assign(hn_, 0);
    for (std::size_t v = 0; v < hn_; ++v) {
      bool all_before = true;
      for (std::size_t y = 0; y < hn_; ++y)
        if ((hadj_[v] >> y & 1U) && rank_[y] > rank_[v]) all_before = false;
      singleton_[v] = std::popcount(hadj_[v]) <= 2 && all_before;
    }

    twin_prev_.assign(hn_, -1);
    for (std::size_t k = 0; k < hn_; ++k) {
      const std::size_t v = order_[k];
      for (std::size_t j = 0; j < k; ++j) {
        const std::size_t u = order_[j];
        const std::uint32_t nu = hadj_[u] & ~(1U << v);
        const std::uint32_t nv = hadj_[v] & ~(1U << u);
        if (nu == nv && singleton_[u] == singleton_[v]) twin_prev_[v] = static_cast<int>(u);
      }
    }
  }

  Mask neighborhood(Mask s) const {
    Mask out = 0;
    for (Mask m = s; m; m &= m - 1) out |= adj_[lowest(m)];
    return out & ~s;
  }

  int unplaced_neighbors(std::size_t v) const {
    int c = 0;
    for (std::size_t y = 0; y < hn_; ++y)
      if ((hadj_[v] >> y & 1U) && !placed_[y]) ++c;
    return c;
  }

  bool touches_required(std::size_t v, Mask s) const {
    const Mask ns = neighborhood(s);
    for (std::size_t y = 0; y < hn_; ++y)
      if ((hadj_[v] >> y & 1U) && placed_[y] && !(ns & set_[y])) return false;
    return true;
  }

  bool feasible(Mask free) const {
    for (std::size_t y = 0; y < hn_; ++y) {
      if (!placed_[y]) continue;
      const int need = unplaced_neighbors(y);
      if (need > 0 && count(neighborhood(set_[y]) & free) < need) return false;
    }
    return true;
  }

  bool place(std::size_t k, Mask free) {
    if (k == hn_) return true;
    const std::size_t remaining = hn_ - k;
    if (static_cast<std::size_t>(count(free)) < remaining) return false;
    if (!feasible(free)) return false;

    const std::size_t v = order_[k];
    const std::size_t min_root = twin_prev_[v] >= 0 ? root_[twin_prev_[v]] + 1 : 0;

    for (Mask roots = free; roots; roots &= roots - 1) {
      const std::size_t r = lowest(roots);
      if (r < min_root) continue;
      if (singleton_[v]) {
        if (try_set(k, v, r, bit(r), free)) return true;
        continue;
      }
      const Mask allowed = free & ~(bit(r) - 1);
      const std::size_t max_size = static_cast<std::size_t>(count(free)) - (remaining - 1);
      if (grow(k, v, r, bit(r), 0, allowed, free, max_size)) return true;
    }
    return false;
  }

  bool try_set(std::size_t k, std::size_t v, std::size_t r, Mask s, Mask free) {
    if (!touches_required(v, s)) return false;
    const Mask rest = free & ~s;
    if (count(neighborhood(s) & rest) < unplaced_neighbors(v)) return false;
    set_[v] = s;
    root_[v] = r;
    placed_[v] = 1;
    const bool ok = place(k + 1, rest);
    placed_[v] = 0;
    return ok;
  }

  // Enumerates each connected S with min(S) = r inside `allowed` exactly
  // once: branch on the lowest frontier vertex (take it, or ban it).
  bool grow(std::size_t k, std::size_t v, std::size_t r, Mask s, Mask banned, Mask allowed, Mask free,
            std::size_t max_size) {
    if (try_set(k, v, r, s, free)) return true;
    return extend(k, v, r, s, banned, allowed, free, max_size);
  }

  bool extend(std::size_t k, std::size_t v, std::size_t r, Mask s, Mask banned, Mask allowed, Mask free,
              std::size_t max_size) {
    if (static_cast<std::size_t>(count(s)) >= max_size) return false;
    const Mask frontier = neighborhood(s) & allowed & ~banned;
    if (!frontier) return false;
    const std::size_t w = lowest(frontier);
    if (grow(k, v, r, s | bit(w), banned, allowed, free, max_size)) return true;
    return extend(k, v, r, s, banned | bit(w), allowed, free, max_size);
  }

  std::vector<Mask> adj_;
  std::size_t n_;
  std::size_t hn_;
  std::vector<std::uint32_t> hadj_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> rank_;
  std::vector<char> singleton_;
  std::vector<int> twin_prev_;
  std::vector<Mask> set_;
  std::vector<std::size_t> root_;
  std::vector<char> placed_;
};

std::optional<MinorWitness> search_piece(const Graph& g, const std::vector<VertexId>& piece, const Graph& h) {
  if (piece.size() < h.order()) return std::nullopt;
  if (piece.size() > kEngineMaxPiece) {
    throw CapabilityError("minor search piece has " + std::to_string(piece.size()) +
                          " vertices; engine limit is " + std::to_string(kEngineMaxPiece));
  }
  const Graph sub = induced_subgraph(g, piece);
  if (sub.size() < h.size()) return std::nullopt;

  std::vector<Mask> adj(sub.order(), 0);
  for (auto [a, b] : sub.edges()) {
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  BranchSetSearch search(std::move(adj), h);
  if (!search.run()) return std::nullopt;

  MinorWitness w;
  w.verdict = Verdict::present;
  for (Mask m : search.sets()) {
    std::vector<VertexId> set;
    for (; m; m &= m - 1) set.push_back(piece[lowest(m)]);
    std::sort(set.begin(), set.end());
    w.branch_sets.push_back(std::move(set));
  }
  return w;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::present:
      return "present";
    case Verdict::present_by_density:
      return "present_by_density";
    case Verdict::absent:
      return "absent";
  }
  return "unknown";
}

MinorWitness has_minor(const Graph& g, const Graph& h) {
  if (h.order() > kMaxPatternOrder) {
    throw CapabilityError("pattern has " + std::to_string(h.order()) + " vertices; limit is " +
                          std::to_string(kMaxPatternOrder));
  }
  if (h.order() == 0) return {Verdict::present, {}};
  if (g.order() < h.order() || g.size() < h.size()) return {};

  // A 2-connected pattern lives inside one block, a connected one inside
  // one component.
  std::vector<std::vector<VertexId>> pieces;
  if (is_biconnected(h)) {
    pieces = biconnected_blocks(g);
  } else if (is_connected(h)) {
    pieces = components(g);
  } else {
    std::vector<VertexId> all(g.order());
    for (VertexId v = 0; v < g.order(); ++v) all[v] = v;
    pieces.push_back(std::move(all));
  }
  for (const auto& piece : pieces) {
    if (auto w = search_piece(g, piece, h)) return *w;
  }
  return {};
}

std::optional<std::string> witness_violation(const Graph& g, const Graph& h, const MinorWitness& w) {
  if (w.verdict != Verdict::present) return "verdict carries no model";
  if (w.branch_sets.size() != h.order()) return "branch set count differs from pattern order";
  std::vector<int> owner(g.order(), -1);
  for (std::size_t a = 0; a < w.branch_sets.size(); ++a) {
    const auto& set = w.branch_sets[a];
    if (set.empty()) return "branch set " + std::to_string(a) + " is empty";
    for (VertexId v : set) {
      if (v >= g.order()) return "branch set " + std::to_string(a) + " has out-of-range vertex";
      if (owner[v] >= 0) return "vertex " + std::to_string(v) + " used twice";
      owner[v] = static_cast<int>(a);
    }
  }
  for (std::size_t a = 0; a < w.branch_sets.size(); ++a) {
    const auto& set = w.branch_sets[a];
    std::vector<VertexId> stack{set.front()};
    std::vector<char> seen(g.order(), 0);
    seen[set.front()] = 1;
    std::size_t reached = 0;
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      ++reached;
      for (VertexId y : g.neighbors(x)) {
        if (!seen[y] && owner[y] == static_cast<int>(a)) {
          seen[y] = 1;
          stack.push_back(y);
        }
      }
    }
    if (reached != set.size()) return "branch set " + std::to_string(a) + " is disconnected";
  }
  for (auto [a, b] : h.edges()) {
    bool realized = false;
    for (VertexId x : w.branch_sets[a]) {
      for (VertexId y : w.branch_sets[b]) {
        if (g.has_edge(x, y)) {
          realized = true;
          break;
        }
      }
      if (realized) break;
    }
    if (!realized) return "pattern edge {" + std::to_string(a) + "," + std::to_string(b) + "} not realized";
  }
  return std::nullopt;
}

bool k2t_subgraph_test(const Graph& g, int t) {
  if (t < 1) throw DomainError("k2t_subgraph_test: need t >= 1");
  return max_common_neighbors(g) >= static_cast<std::size_t>(t);
}

MinorWitness k2t_minor_test(const Graph& g, int t, bool require_witness) {
  if (t < 2) throw DomainError("k2t_minor_test: need t >= 2");
  const std::size_t n = g.order();
  const auto tt = static_cast<std::size_t>(t);
  if (n < tt + 2) return {};

  if (!require_witness && 2 * g.size() > (tt + 1) * (n - 1)) return {Verdict::present_by_density, {}};

  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (common_neighbor_count(g, u, v) < tt) continue;
      MinorWitness w;
      w.verdict = Verdict::present;
      w.branch_sets.push_back({u});
      w.branch_sets.push_back({v});
      for (VertexId c : g.neighbors(u)) {
        if (w.branch_sets.size() == tt + 2) break;
        if (g.has_edge(v, c)) w.branch_sets.push_back({c});
      }
      return w;
    }
  }
  return has_minor(g, complete_bipartite(2, tt));
}

}  // namespace k2t
