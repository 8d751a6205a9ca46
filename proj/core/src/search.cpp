#include "k2t/search.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <string>
#include <thread>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/graph6.hpp"
#include "k2t/minor.hpp"
#include "k2t/spectral.hpp"

namespace k2t {

namespace {

constexpr double kImprovement = 1e-9;

bool minor_free(const Graph& g, std::int64_t t) {
  return k2t_minor_test(g, static_cast<int>(t)).verdict == Verdict::absent;
}

// Vertices of a path component listed end to end, or empty if the
// component is not a path on at least 4 vertices.
std::vector<VertexId> as_path(const Graph& g, const std::vector<VertexId>& comp) {
  if (comp.size() < 4) return {};
  const Graph c = induced_subgraph(g, comp);
  if (c.size() + 1 != c.order()) return {};
  VertexId start = static_cast<VertexId>(c.order());
  for (VertexId v = 0; v < c.order(); ++v) {
    const std::size_t d = c.degree(v);
    if (d > 2) return {};
    if (d == 1 && start == c.order()) start = v;
  }
  std::vector<VertexId> path{start};
  VertexId prev = start;
  VertexId cur = start;
  while (path.size() < c.order()) {
    VertexId step = cur;
    for (VertexId w : c.neighbors(cur))
      if (w != prev) step = w;
    prev = cur;
    cur = step;
    path.push_back(cur);
  }
  for (VertexId& v : path) v = comp[v];
  return path;
}

}  // namespace

SearchRecord make_record(const Graph& g, std::int64_t t, double mu) {
  SearchRecord r;
  r.graph6 = write_graph6(g);
  r.n = static_cast<std::int64_t>(g.order());
  r.t = t;
  r.mu = mu;
  r.gap_upper = bound_upper(t, r.n) - mu;
  if (t == 3 && r.n >= 2) r.gap_ysh = bound_ysh(r.n) - mu;
  r.is_ft = is_Ft(g, t);
  r.violated = r.gap_upper < -kImprovement;
  return r;
}

// ---------------------------------------------------------------------------

void ArgmaxAccumulator::offer(const Graph& g) {
  if (order_ && *order_ != g.order()) {
    throw PreconditionError("exhaustive_max: mixed orders in stream (" + std::to_string(*order_) + " and " +
                            std::to_string(g.order()) + ")");
  }
  order_ = g.order();
  ++scanned_;
  if (g.order() == 0 || !minor_free(g, t_)) return;
  ++admissible_;
  const double mu = spectral_radius(g).mu;
  if (!kept_.empty() && mu < best_ - kTieTolerance) return;
  kept_.push_back(make_record(g, t_, mu));
  if (kept_.size() == 1 || mu > best_) {
    best_ = std::max(best_, mu);
    prune();
  }
}

void ArgmaxAccumulator::prune() {
  std::erase_if(kept_, [this](const SearchRecord& r) { return r.mu < best_ - kTieTolerance; });
}

void ArgmaxAccumulator::merge(ArgmaxAccumulator&& other) {
  if (order_ && other.order_ && *order_ != *other.order_) {
    throw PreconditionError("exhaustive_max: merged streams have different orders");
  }
  if (!order_) order_ = other.order_;
  scanned_ += other.scanned_;
  admissible_ += other.admissible_;
  if (other.kept_.empty()) return;
  best_ = kept_.empty() ? other.best_ : std::max(best_, other.best_);
  for (auto& r : other.kept_) kept_.push_back(std::move(r));
  prune();
}

ExhaustiveResult ArgmaxAccumulator::finish() && {
  ExhaustiveResult out;
  out.scanned = scanned_;
  out.admissible = admissible_;
  out.argmax = std::move(kept_);
  std::sort(out.argmax.begin(), out.argmax.end(),
            [](const SearchRecord& a, const SearchRecord& b) { return a.graph6 < b.graph6; });
  return out;
}

void offer_batch(ArgmaxAccumulator& into, std::span<const Graph> batch, std::size_t jobs) {
  jobs = std::max<std::size_t>(1, std::min(jobs, batch.size()));
  if (jobs == 1) {
    for (const Graph& g : batch) into.offer(g);
    return;
  }
  std::vector<ArgmaxAccumulator> workers(jobs, into.empty_copy());
  std::vector<std::exception_ptr> errors(jobs);
  {
    std::vector<std::jthread> threads;
    const std::size_t chunk = (batch.size() + jobs - 1) / jobs;
    for (std::size_t w = 0; w < jobs; ++w) {
      threads.emplace_back([&, w] {
        try {
          const std::size_t lo = w * chunk;
          const std::size_t hi = std::min(batch.size(), lo + chunk);
          for (std::size_t i = lo; i < hi; ++i) workers[w].offer(batch[i]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& w : workers) into.merge(std::move(w));
}

ExhaustiveResult exhaustive_max(std::span<const Graph> source, std::int64_t t, std::size_t jobs) {
  ArgmaxAccumulator acc(t);
  offer_batch(acc, source, jobs);
  return std::move(acc).finish();
}

// ---------------------------------------------------------------------------

std::vector<Move> candidate_moves(const Graph& g) {
  std::vector<Move> moves;
  if (g.order() < 2) return moves;
  const VertexId hub = max_degree_vertex(g);

  const Graph rest = remove_vertex(g, hub);
  auto lift = [hub](VertexId v) { return v >= hub ? v + 1 : v; };
  for (const auto& comp : components(rest)) {
    std::vector<VertexId> path = as_path(rest, comp);
    if (path.empty()) continue;
    for (VertexId& v : path) v = lift(v);
    moves.push_back(make_rotation(path));
  }
  for (VertexId v = 0; v < g.order(); ++v) {
    if (v != hub && !g.has_edge(v, hub)) moves.push_back(make_lemma_rewire(g, v, hub));
  }
  for (VertexId u = 0; u < g.order(); ++u)
    for (VertexId v = u + 1; v < g.order(); ++v)
      if (!g.has_edge(u, v)) moves.push_back(make_edge_addition(u, v));
  return moves;
}

SearchRecord local_search(std::int64_t t, std::int64_t n, const Graph& start, std::size_t max_steps) {
  if (static_cast<std::int64_t>(start.order()) != n) {
    throw PreconditionError("local_search: start graph has order " + std::to_string(start.order()) +
                            ", expected " + std::to_string(n));
  }
  if (!minor_free(start, t)) throw PreconditionError("local_search: start graph contains a K_{2,t} minor");

  Graph current = start;
  double mu = spectral_radius(current).mu;
  std::vector<Move> trace;
  const std::vector<double> zero(current.order(), 0.0);

  for (std::size_t step = 0; step < max_steps; ++step) {
    struct Candidate {
      double mu;
      std::size_t index;
      Graph graph;
    };
    std::vector<Candidate> better;
    const std::vector<Move> moves = candidate_moves(current);
    for (std::size_t i = 0; i < moves.size(); ++i) {
      Graph next = apply_move(current, zero, moves[i]).graph;
      const double next_mu = spectral_radius(next).mu;
      if (next_mu > mu + kImprovement) better.push_back({next_mu, i, std::move(next)});
    }
    std::stable_sort(better.begin(), better.end(),
                     [](const Candidate& a, const Candidate& b) { return a.mu > b.mu; });
    bool moved = false;
    for (auto& c : better) {
      if (!minor_free(c.graph, t)) continue;
      current = std::move(c.graph);
      mu = c.mu;
      trace.push_back(moves[c.index]);
      moved = true;
      break;
    }
    if (!moved) break;
  }

  SearchRecord r = make_record(current, t, mu);
  r.move_trace = std::move(trace);
  return r;
}

}  // namespace k2t
