#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "k2t/graph.hpp"
#include "k2t/moves.hpp"

namespace k2t {

inline constexpr std::size_t kGeneratorMaxOrder = 8;
inline constexpr double kTieTolerance = 1e-10;

struct SearchRecord {
  std::string graph6;
  std::int64_t n = 0;
  std::int64_t t = 0;
  double mu = 0.0;
  double gap_upper = 0.0;        // bound_upper(t, n) - mu
  std::optional<double> gap_ysh;  // bound_ysh(n) - mu, t = 3 only
  bool is_ft = false;
  bool violated = false;  // mu exceeds bound_upper(t, n)
  std::vector<Move> move_trace;
};

SearchRecord make_record(const Graph& g, std::int64_t t, double mu);

/// One representative per isomorphism class, each in canonical labeling,
/// sorted by canonical code. Built by vertex augmentation from order n-1
/// (every connected graph has a non-cut vertex to peel off) with
/// canonical-form deduplication. CapabilityError for n > 8.
std::vector<Graph> enumerate_connected(std::size_t n);

/// As above; when `connected_only` is false all graphs of order n are
/// produced.
std::vector<Graph> enumerate_graphs(std::size_t n, bool connected_only);

struct ExhaustiveResult {
  std::vector<SearchRecord> argmax;  // sorted by graph6
  std::size_t scanned = 0;
  std::size_t admissible = 0;  // K_{2,t}-minor-free members of the stream
};

/// Running argmax over a stream: keeps every K_{2,t}-minor-free graph whose
/// mu is within kTieTolerance of the best seen.
class ArgmaxAccumulator {
 public:
  explicit ArgmaxAccumulator(std::int64_t t) : t_(t) {}

  void offer(const Graph& g);
  void merge(ArgmaxAccumulator&& other);
  ExhaustiveResult finish() &&;
  /// Fresh accumulator for the same t.
  ArgmaxAccumulator empty_copy() const { return ArgmaxAccumulator(t_); }

 private:
  void prune();

  std::int64_t t_;
  std::optional<std::size_t> order_;
  double best_ = 0.0;
  std::vector<SearchRecord> kept_;
  std::size_t scanned_ = 0;
  std::size_t admissible_ = 0;
};

/// Offers every graph of `batch` to `into`, spreading the work over `jobs`
/// threads with private accumulators that are merged afterwards.
void offer_batch(ArgmaxAccumulator& into, std::span<const Graph> batch, std::size_t jobs);

/// Maximal spectral radius among the K_{2,t}-minor-free members of
/// `source`. All graphs must share one order (PreconditionError otherwise).
/// With jobs > 1 the stream is split into contiguous chunks handled by
/// separate threads; the merged result does not depend on the split.
ExhaustiveResult exhaustive_max(std::span<const Graph> source, std::int64_t t, std::size_t jobs = 1);

/// Moves local search considers on g: rotations of path components of
/// g - hub, lemma rewires of vertices outside the hub's neighborhood, and
/// every single-edge addition. The hub is the maximum-degree vertex.
std::vector<Move> candidate_moves(const Graph& g);

/// Hill climbing on mu. Each step applies the candidate with the largest
/// strictly improving mu whose result is still K_{2,t}-minor-free, and
/// stops at a fixpoint or after max_steps. PreconditionError if start has
/// the wrong order or already contains the minor.
SearchRecord local_search(std::int64_t t, std::int64_t n, const Graph& start, std::size_t max_steps);

}  // namespace k2t
