#pragma once

#include <cstdint>

#include "k2t/graph.hpp"

namespace k2t {

/// n - 1 = p t + s with 0 <= s < t and p >= 1.
struct FtParams {
  std::int64_t t = 0;
  std::int64_t n = 0;
  std::int64_t p = 0;
  std::int64_t s = 0;
};

/// Requires t >= 2 and n >= t + 1; DomainError otherwise.
FtParams split_params(std::int64_t t, std::int64_t n);

/// K_1 joined to (p K_t + K_s). Vertex 0 is the hub, the K_t blocks follow
/// in order, the K_s block (if any) comes last. For t = 2 this is the
/// friendship graph, with the pendant vertex last when n is even.
Graph build_F(std::int64_t t, std::int64_t n);

/// Structural recognition: some dominating vertex whose removal leaves
/// exactly p disjoint K_t's plus one K_s, for (p, s) split from g's order.
bool is_Ft(const Graph& g, std::int64_t t);

}  // namespace k2t
