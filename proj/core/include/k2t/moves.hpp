#pragma once

#include <span>
#include <string>
#include <vector>

#include "k2t/graph.hpp"

namespace k2t {

enum class MoveKind {
  lemma_rewire,  // strip every edge at v, then join v to the hub
  rot_odd,       // odd path, h = 2s+1 >= 5: split off a triangle
  rot_even,      // even path, h = 2s >= 6: split off a triangle
  rot_h4,        // path on 4 vertices: triangle plus isolated end
  add_edge,      // plain edge insertion, used by local search
};

std::string to_string(MoveKind kind);

/// An edge rewiring. `removed` edges must exist and `added` edges must not;
/// the vertex count never changes. Edge endpoints keep the order they were
/// built with, which rotation_identity_delta relies on.
struct Move {
  MoveKind kind = MoveKind::add_edge;
  std::vector<Edge> removed;
  std::vector<Edge> added;
};

std::string to_string(const Move& m);

/// Rotation for a path component listed end to end: rot_h4 for 4 vertices,
/// rot_odd for odd h >= 5, rot_even for even h >= 6. With path = v_1..v_h
/// and s = floor(h/2), the longer rotations drop {v_{s-1}, v_s} and
/// {v_{s+2}, v_{s+3}} and add {v_s, v_{s+2}} and {v_{s-1}, v_{s+3}}; rot_h4
/// drops {v_1, v_2} and adds {v_2, v_4}. DomainError for h < 4.
Move make_rotation(std::span<const VertexId> path);

Move make_lemma_rewire(const Graph& g, VertexId v, VertexId hub);
Move make_edge_addition(VertexId u, VertexId v);

struct MoveResult {
  Graph graph;
  /// Change in edge_weight_sum under the given weights, computed from the
  /// touched edges alone: sum over added w_i w_j minus sum over removed.
  double predicted_delta = 0.0;
};

/// PreconditionError if a removed edge is missing, an added edge already
/// exists, or w has the wrong length.
MoveResult apply_move(const Graph& g, std::span<const double> w, const Move& m);

/// Closed-form change for the rotations when w is palindromic along the
/// path: (w_{s-1} - w_s)^2 for rot_odd, 0 for rot_even and rot_h4.
/// DomainError for other move kinds.
double rotation_identity_delta(const Move& m, std::span<const double> w);

}  // namespace k2t
