#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "k2t/graph.hpp"

namespace k2t {

inline constexpr double kDefaultTolerance = 1e-10;
inline constexpr std::size_t kIterationCap = 1'000'000;
inline constexpr std::size_t kDenseFallbackOrder = 64;

struct SpectralResult {
  double mu = 0.0;
  /// Unit nonnegative Perron vector; empty optional for disconnected graphs.
  std::optional<std::vector<double>> vector;
  std::size_t iterations = 0;
  /// max_v |(Ax)_v - mu x_v| of the returned vector (component-wise max when
  /// the graph is disconnected).
  double residual = 0.0;
  bool dense_fallback = false;
};

/// Largest adjacency eigenvalue.
///
/// Power iteration on A + I from the all-ones vector, stopping once the
/// Rayleigh-quotient residual drops to `tol`. Components are solved
/// separately and mu is their maximum; the vector is only reported for
/// connected input. If the iteration cap is hit on a component of order
/// <= kDenseFallbackOrder the dense route takes over, otherwise
/// ConvergenceError is thrown. n = 0 is a DomainError.
SpectralResult spectral_radius(const Graph& g, double tol = kDefaultTolerance);

/// Same computation, but requires a connected graph and always returns the
/// vector. Disconnected input is a PreconditionError.
SpectralResult perron_vector(const Graph& g, double tol = kDefaultTolerance);

/// Dense route: Householder tridiagonalization, Sturm-sequence bisection
/// for the top eigenvalue, inverse iteration for its vector. O(n^3); used as
/// the power-iteration fallback and exposed for cross-checks.
SpectralResult dense_spectral_radius(const Graph& g);

/// Sum over edges {i,j} of w_i * w_j. Throws PreconditionError on a length
/// mismatch.
double edge_weight_sum(const Graph& g, std::span<const double> w);

/// ||Ax - mu x||_inf.
double eigen_residual(const Graph& g, std::span<const double> x, double mu);

// ---------------------------------------------------------------------------
// Extremal-family closed forms.

/// Largest root of (x - s + 1)(x^2 - (t-1)x - n + 1) + s(t - s) with
/// s = (n-1) mod t; for s = 0 the quadratic factor is solved directly.
/// Requires t >= 2, n >= t + 1.
double ft_mu_exact(std::int64_t t, std::int64_t n);

/// Monic coefficients {b, c, d} of the cubic above, x^3 + b x^2 + c x + d.
struct CubicCoefficients {
  double b, c, d;
};
CubicCoefficients ft_cubic(std::int64_t t, std::int64_t n);

/// (t-1)/2 + sqrt(n + (t^2 - 2t - 3)/4). Requires t >= 2, n >= 1.
double bound_upper(std::int64_t t, std::int64_t n);

/// bound_upper(t,n) - t(t+1)/(8n).
double bound_lower(std::int64_t t, std::int64_t n);

/// Whether (t, n) lies in the range where bound_lower is claimed to hold:
/// t >= 4 and n >= 400 t^6.
bool bound_lower_in_range(std::int64_t t, std::int64_t n);

/// 3/2 + sqrt(n - 7/4), the K_{2,3} bound. Requires n >= 2.
double bound_ysh(std::int64_t n);

struct BoundSet {
  double upper = 0.0;
  double lower = 0.0;
  std::optional<double> ysh;  // t == 3 only
  bool lower_in_range = false;
};
BoundSet bounds(std::int64_t t, std::int64_t n);

/// 16 (t-1)^4 (5t-3)^2: order beyond which a maximizer's top Perron entry
/// sits on a dominating vertex.
double hub_lemma_threshold(std::int64_t t);
/// 400 t^6, the general-t equality regime.
double general_theorem_threshold(std::int64_t t);
/// n > 40000 for t = 3.
inline constexpr std::int64_t kTriangleTheoremThreshold = 40000;

}  // namespace k2t
