#include "k2t/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "k2t/errors.hpp"

namespace k2t {

namespace {

// Compressed adjacency of one component, locally relabeled.
struct Csr {
  std::vector<std::size_t> offset;
  std::vector<std::uint32_t> target;

  std::size_t order() const { return offset.size() - 1; }

  void multiply(const std::vector<double>& x, std::vector<double>& y) const {
    const std::size_t n = order();
    for (std::size_t v = 0; v < n; ++v) {
      double s = 0.0;
      for (std::size_t k = offset[v]; k < offset[v + 1]; ++k) s += x[target[k]];
      y[v] = s;
    }
  }
};

Csr make_csr(const Graph& g, std::span<const VertexId> vertices) {
  std::vector<std::int64_t> local(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<std::int64_t>(i);
  Csr m;
  m.offset.push_back(0);
  for (VertexId v : vertices) {
    for (VertexId w : g.neighbors(v)) {
      if (local[w] >= 0) m.target.push_back(static_cast<std::uint32_t>(local[w]));
    }
    m.offset.push_back(m.target.size());
  }
  return m;
}

double norm2(const std::vector<double>& x) {
  return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

struct ComponentSolution {
  double mu = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  double residual = 0.0;
  bool dense = false;
};

ComponentSolution dense_component(const Graph& g, std::span<const VertexId> vertices);

ComponentSolution power_component(const Graph& g, std::span<const VertexId> vertices, double tol) {
  const Csr a = make_csr(g, vertices);
  const std::size_t n = a.order();
  ComponentSolution out;
  out.x.assign(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);

  for (std::size_t it = 0; it < kIterationCap; ++it) {
    a.multiply(out.x, ax);
    const double rho = std::inner_product(out.x.begin(), out.x.end(), ax.begin(), 0.0);
    double res = 0.0;
    for (std::size_t v = 0; v < n; ++v) res = std::max(res, std::abs(ax[v] - rho * out.x[v]));
    out.mu = rho;
    out.residual = res;
    out.iterations = it + 1;
    if (res <= tol) return out;
    // Shifted step: (A + I) x.
    for (std::size_t v = 0; v < n; ++v) ax[v] += out.x[v];
    const double nrm = norm2(ax);
    for (std::size_t v = 0; v < n; ++v) out.x[v] = ax[v] / nrm;
  }

  if (n <= kDenseFallbackOrder) {
    ComponentSolution d = dense_component(g, vertices);
    d.iterations += out.iterations;
    return d;
  }
  throw ConvergenceError("power iteration did not reach tol=" + std::to_string(tol) + " within " +
                         std::to_string(kIterationCap) + " iterations (residual " +
                         std::to_string(out.residual) + ")");
}

// ---------------------------------------------------------------------------
// Dense route.

using Matrix = std::vector<std::vector<double>>;

// Reduces symmetric `a` to tridiagonal form (diag, off) by Householder
// reflections; `a` is overwritten.
void tridiagonalize(Matrix a, std::vector<double>& diag, std::vector<double>& off) {
  const std::size_t n = a.size();
  diag.assign(n, 0.0);
  off.assign(n, 0.0);  // off[i] couples i-1 and i
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a[i][k] * a[i][k];
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (a[k + 1][k] > 0) alpha = -alpha;

    std::vector<double> v(n, 0.0);
    v[k + 1] = a[k + 1][k] - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a[i][k];
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) continue;

    // A <- H A H with H = I - 2 v v^T / (v^T v).
    std::vector<double> p(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a[i][j] * v[j];
      p[i] = 2.0 * s / vnorm2;
    }
    double kappa = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) kappa += v[i] * p[i];
    kappa /= vnorm2;
    std::vector<double> q(n);
    for (std::size_t i = 0; i < n; ++i) q[i] = p[i] - kappa * v[i];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= v[i] * q[j] + q[i] * v[j];
  }
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i][i];
  for (std::size_t i = 1; i < n; ++i) off[i] = a[i][i - 1];
}

// Number of eigenvalues of the tridiagonal matrix strictly below x.
std::size_t sturm_count(const std::vector<double>& diag, const std::vector<double>& off, double x) {
  std::size_t count = 0;
  double d = 1.0;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    const double b2 = i == 0 ? 0.0 : off[i] * off[i];
    d = diag[i] - x - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -1e-300;
    if (d < 0) ++count;
  }
  return count;
}

// Solves (A - sigma I) y = b in place by Gaussian elimination with partial
// pivoting on a copy of the matrix.
std::vector<double> shifted_solve(const Matrix& a, double sigma, std::vector<double> b) {
  const std::size_t n = a.size();
  Matrix m = a;
  for (std::size_t i = 0; i < n; ++i) m[i][i] -= sigma;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r][col]) > std::abs(m[piv][col])) piv = r;
    std::swap(m[col], m[piv]);
    std::swap(b[col], b[piv]);
    if (m[col][col] == 0.0) m[col][col] = 1e-300;
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> y(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * y[c];
    y[i] = s / m[i][i];
  }
  return y;
}

ComponentSolution dense_component(const Graph& g, std::span<const VertexId> vertices) {
  const std::size_t n = vertices.size();
  Matrix a(n, std::vector<double>(n, 0.0));
  double max_deg = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double deg = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && g.has_edge(vertices[i], vertices[j])) {
        a[i][j] = 1.0;
        deg += 1.0;
      }
    }
    max_deg = std::max(max_deg, deg);
  }

  ComponentSolution out;
  out.dense = true;
  if (n == 1) {
    out.x = {1.0};
    return out;
  }

  std::vector<double> diag, off;
  tridiagonalize(a, diag, off);
  double lo = -max_deg - 1.0;
  double hi = max_deg + 1.0;
  for (int it = 0; it < 200 && hi - lo > 4 * std::numeric_limits<double>::epsilon() * (1.0 + hi); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sturm_count(diag, off, mid) >= n) hi = mid;  // every eigenvalue below mid
    else lo = mid;
  }
  out.mu = 0.5 * (lo + hi);

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  const double sigma = out.mu + 1e-9 * (1.0 + out.mu);
  for (int it = 0; it < 4; ++it) {
    x = shifted_solve(a, sigma, x);
    const double nrm = norm2(x);
    for (double& v : x) v /= nrm;
  }
  if (std::accumulate(x.begin(), x.end(), 0.0) < 0)
    for (double& v : x) v = -v;
  out.x = std::move(x);
  std::vector<double> ax(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) ax[i] += a[i][j] * out.x[j];
  for (std::size_t i = 0; i < n; ++i)
    out.residual = std::max(out.residual, std::abs(ax[i] - out.mu * out.x[i]));
  return out;
}

template <typename Solve>
SpectralResult solve_by_components(const Graph& g, Solve&& solve) {
  if (g.order() == 0) throw DomainError("spectral radius of the empty graph is undefined");
  const auto comps = components(g);
  SpectralResult result;
  result.mu = -1.0;
  for (const auto& comp : comps) {
    ComponentSolution s = solve(comp);
    result.iterations += s.iterations;
    result.residual = std::max(result.residual, s.residual);
    result.dense_fallback = result.dense_fallback || s.dense;
    result.mu = std::max(result.mu, s.mu);
    if (comps.size() == 1) result.vector = std::move(s.x);
  }
  if (result.vector) {
    // Entries are nonnegative in exact arithmetic; clamp round-off.
    for (double& v : *result.vector) v = std::max(v, 0.0);
  }
  return result;
}

}  // namespace

SpectralResult spectral_radius(const Graph& g, double tol) {
  if (!(tol > 0)) throw DomainError("spectral_radius: tol must be positive");
  return solve_by_components(g, [&](const std::vector<VertexId>& comp) {
    return power_component(g, comp, tol);
  });
}

SpectralResult perron_vector(const Graph& g, double tol) {
  if (g.order() == 0) throw DomainError("perron_vector: empty graph");
  if (!is_connected(g)) throw PreconditionError("perron_vector: graph is disconnected");
  return spectral_radius(g, tol);
}

SpectralResult dense_spectral_radius(const Graph& g) {
  return solve_by_components(g, [&](const std::vector<VertexId>& comp) {
    return dense_component(g, comp);
  });
}

double edge_weight_sum(const Graph& g, std::span<const double> w) {
  if (w.size() != g.order()) {
    throw PreconditionError("edge_weight_sum: weight length " + std::to_string(w.size()) +
                            " != order " + std::to_string(g.order()));
  }
  double s = 0.0;
  for (auto [u, v] : g.edges()) s += w[u] * w[v];
  return s;
}

double eigen_residual(const Graph& g, std::span<const double> x, double mu) {
  if (x.size() != g.order()) throw PreconditionError("eigen_residual: length mismatch");
  double res = 0.0;
  for (VertexId v = 0; v < g.order(); ++v) {
    double s = 0.0;
    for (VertexId w : g.neighbors(v)) s += x[w];
    res = std::max(res, std::abs(s - mu * x[v]));
  }
  return res;
}

}  // namespace k2t
