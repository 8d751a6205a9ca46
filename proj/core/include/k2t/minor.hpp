#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "k2t/canonical.hpp"
#include "k2t/graph.hpp"

namespace k2t {

inline constexpr std::size_t kMaxPatternOrder = 12;
inline constexpr std::size_t kOracleMaxOrder = 8;
/// Largest piece (component or block) the branch-set search will take on.
inline constexpr std::size_t kEngineMaxPiece = 64;

enum class Verdict {
  present,             // branch_sets holds a model
  present_by_density,  // edge count forces the minor; no model constructed
  absent,              // exhaustive search found no model
};

/// A minor model of H in G: branch_sets[a] is the G-vertex set standing in
/// for pattern vertex a. Sets are pairwise disjoint, each induces a connected
/// subgraph, and every H-edge {a,b} is realized by some G-edge between
/// branch_sets[a] and branch_sets[b].
struct MinorWitness {
  Verdict verdict = Verdict::absent;
  std::vector<std::vector<VertexId>> branch_sets;

  bool present() const noexcept { return verdict != Verdict::absent; }
};

std::string to_string(Verdict v);

/// Branch-set backtracking. Throws CapabilityError if |V(h)| > 12 or if a
/// piece of g that must be searched exceeds kEngineMaxPiece vertices.
MinorWitness has_minor(const Graph& g, const Graph& h);

/// Returns a description of the first violated model invariant, or nullopt
/// if `w` is a valid model of h in g. Written independently of the search.
std::optional<std::string> witness_violation(const Graph& g, const Graph& h, const MinorWitness& w);

/// K_{2,t} containment with shortcuts: (a) 2|E| > (t+1)(n-1) answers
/// present_by_density unless a witness is required, (b) a pair with >= t
/// common neighbors is a subgraph witness, (c) otherwise has_minor.
MinorWitness k2t_minor_test(const Graph& g, int t, bool require_witness = false);

/// True iff some vertex pair has >= t common neighbors (K_{2,t} subgraph).
bool k2t_subgraph_test(const Graph& g, int t);

/// Exact minor test by recursive vertex deletion and edge contraction down
/// to |V(h)| vertices, where a subgraph check covers the remaining edge
/// deletions. Results are memoized per canonical form of the host, so one
/// oracle instance amortizes work across many queries for a fixed pattern.
class MinorOracle {
 public:
  explicit MinorOracle(Graph pattern);

  /// Throws CapabilityError if g.order() > kOracleMaxOrder.
  bool contains(const Graph& g);

  const Graph& pattern() const noexcept { return pattern_; }
  std::size_t cache_size() const noexcept { return memo_.size(); }

 private:
  bool recurse(const Graph& g);
  bool spans_pattern(const Graph& g) const;

  Graph pattern_;
  std::size_t pattern_edges_;
  std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> memo_;
};

bool has_minor_oracle(const Graph& g, const Graph& h);

}  // namespace k2t
