#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "k2t/graph.hpp"

namespace k2t {

inline constexpr std::size_t kCanonicalMaxOrder = 10;

/// Lexicographically minimal upper-triangle bit string (graph6 pair order,
/// first pair most significant) over all relabelings that respect an
/// isomorphism-invariant color refinement. Equal codes <=> isomorphic graphs.
struct CanonicalCode {
  std::uint8_t n = 0;
  std::uint64_t bits = 0;
  auto operator<=>(const CanonicalCode&) const = default;
};

struct CanonicalCodeHash {
  std::size_t operator()(const CanonicalCode& c) const noexcept {
    return std::hash<std::uint64_t>{}(c.bits * 31 + c.n);
  }
};

/// Throws CapabilityError when g.order() > kCanonicalMaxOrder.
CanonicalCode canonical_code(const Graph& g);

/// The graph whose labeled code equals canonical_code(g).
Graph canonical_form(const Graph& g);

Graph graph_from_code(const CanonicalCode& code);

}  // namespace k2t
