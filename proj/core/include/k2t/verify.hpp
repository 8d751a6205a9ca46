#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "k2t/graph.hpp"

namespace k2t {

/// Absolute slack allowed on inequalities that involve the computed
/// spectral radius or Perron vector (C3, C4, C6).
inline constexpr double kAuditNumericTolerance = 1e-7;

/// One inequality, always in the form lhs <= rhs (worst case over the
/// quantified vertices or components). Inapplicable checks have pass=false.
struct AuditCheck {
  std::string id;
  std::string name;
  bool applicable = false;
  bool pass = false;
  double lhs = 0.0;
  double rhs = 0.0;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  /// True iff every applicable check passed.
  bool all_applicable_pass() const;
};

/// Runs checks C1..C7 in order:
///   C1 two-walks          max |Γ(u)∩Γ(v)| <= t-1
///   C2 degree-sum         d(u) + d(v1) <= n + t - 1, v1 = max-degree vertex
///   C3 degree bound       mu^2 + t - 1 - (t-1) sqrt(n) / x_u <= d(u)
///   C4 entry bound        x_u <= 2(t-1)/sqrt(n) for u other than the top
///                         Perron entry, when mu^2 > n - 1
///   C5 edge bound         2|E| <= (t+1)(n-1) for K_{2,t}-minor-free g
///   C6 quadratic relation mu(mu - t + 1) <= n - 1 with a dominating vertex
///                         and all other degrees <= t
///   C7 component cap      |E(H)| <= |V(H)| + t(t-3)/2 for each component H
///                         of g - v1 without a K_{1,t} minor
/// C1..C4 need g free of K_{2,t} as a subgraph; C3 and C4 also need g
/// connected.
AuditReport audit(const Graph& g, int t);

/// True iff g minus its dominating vertex is a disjoint union of K_t's.
/// PreconditionError if g is disconnected or has no dominating vertex.
bool verify_equality_structure(const Graph& g, int t);

/// True iff the largest Perron entry (ties within 1e-9 go to the lower
/// index) sits on a vertex of degree n - 1. PreconditionError if g is
/// disconnected.
bool lemma1_hub_check(const Graph& g, int t);

/// One JSON object per check and line; a nonempty `graph6` is emitted as the
/// first field of every object.
std::string to_jsonl(const AuditReport& report, std::string_view graph6 = {});
std::string to_table(const AuditReport& report);

}  // namespace k2t
