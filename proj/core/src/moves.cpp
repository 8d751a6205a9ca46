#include "k2t/moves.hpp"

#include <string>

#include "k2t/errors.hpp"

namespace k2t {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::lemma_rewire:
      return "lemma_rewire";
    case MoveKind::rot_odd:
      return "rot_odd";
    case MoveKind::rot_even:
      return "rot_even";
    case MoveKind::rot_h4:
      return "rot_h4";
    case MoveKind::add_edge:
      return "add_edge";
  }
  return "unknown";
}

std::string to_string(const Move& m) {
  std::string out = to_string(m.kind) + "(";
  bool first = true;
  auto edge = [&](char sign, const Edge& e) {
    if (!first) out += ' ';
    first = false;
    out += sign;
    out += std::to_string(e.u) + '-' + std::to_string(e.v);
  };
  for (const Edge& e : m.removed) edge('-', e);
  for (const Edge& e : m.added) edge('+', e);
  return out + ")";
}

Move make_rotation(std::span<const VertexId> path) {
  const std::size_t h = path.size();
  if (h < 4) throw DomainError("make_rotation: path needs at least 4 vertices");
  Move m;
  if (h == 4) {
    m.kind = MoveKind::rot_h4;
    m.removed = {{path[0], path[1]}};
    m.added = {{path[1], path[3]}};
    return m;
  }
  const std::size_t s = h / 2;
  m.kind = h % 2 == 1 ? MoveKind::rot_odd : MoveKind::rot_even;
  // v_i is path[i - 1].
  const VertexId a = path[s - 2];  // v_{s-1}
  const VertexId b = path[s - 1];  // v_s
  const VertexId c = path[s + 1];  // v_{s+2}
  const VertexId d = path[s + 2];  // v_{s+3}
  m.removed = {{a, b}, {c, d}};
  m.added = {{b, c}, {a, d}};
  return m;
}

Move make_lemma_rewire(const Graph& g, VertexId v, VertexId hub) {
  if (v == hub) throw PreconditionError("lemma_rewire: v equals hub");
  if (g.has_edge(v, hub)) throw PreconditionError("lemma_rewire: v already adjacent to hub");
  Move m;
  m.kind = MoveKind::lemma_rewire;
  for (VertexId w : g.neighbors(v)) m.removed.push_back({v, w});
  m.added = {{v, hub}};
  return m;
}

Move make_edge_addition(VertexId u, VertexId v) {
  if (u == v) throw PreconditionError("add_edge: self-loop");
  return Move{MoveKind::add_edge, {}, {{u, v}}};
}

MoveResult apply_move(const Graph& g, std::span<const double> w, const Move& m) {
  if (w.size() != g.order()) throw PreconditionError("apply_move: weight length mismatch");
  MoveResult r{g, 0.0};
  for (const Edge& e : m.removed) {
    if (!r.graph.has_edge(e.u, e.v)) {
      throw PreconditionError("apply_move: missing edge " + std::to_string(e.u) + "-" + std::to_string(e.v));
    }
    r.graph.remove_edge(e.u, e.v);
    r.predicted_delta -= w[e.u] * w[e.v];
  }
  for (const Edge& e : m.added) {
    if (e.u == e.v || r.graph.has_edge(e.u, e.v)) {
      throw PreconditionError("apply_move: edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                              " already present");
    }
    r.graph.add_edge(e.u, e.v);
    r.predicted_delta += w[e.u] * w[e.v];
  }
  return r;
}

double rotation_identity_delta(const Move& m, std::span<const double> w) {
  switch (m.kind) {
    case MoveKind::rot_odd: {
      const double diff = w[m.removed[0].u] - w[m.removed[0].v];
      return diff * diff;
    }
    case MoveKind::rot_even:
    case MoveKind::rot_h4:
      return 0.0;
    default:
      throw DomainError("rotation_identity_delta: not a rotation");
  }
}

}  // namespace k2t
