#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#ifdef K2T_HAVE_EIGEN
#include <Eigen/Dense>
#endif

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/spectral.hpp"
#include "support.hpp"

using namespace k2t;

namespace {

double residual_of(const Graph& g, const SpectralResult& r) { return eigen_residual(g, *r.vector, r.mu); }

}  // namespace

TEST_CASE("complete graphs and stars") {
  for (std::size_t t = 1; t <= 8; ++t) CHECK(spectral_radius(complete_graph(t + 1)).mu == doctest::Approx(t).epsilon(1e-10));
  CHECK(spectral_radius(star_graph(10)).mu == doctest::Approx(3.0).epsilon(1e-10));
  for (std::size_t n = 2; n <= 40; n += 3)
    CHECK(spectral_radius(star_graph(n)).mu == doctest::Approx(std::sqrt(n - 1.0)).epsilon(1e-10));
}

TEST_CASE("F_3(10) equals 1 + sqrt(10)") {
  const auto r = spectral_radius(build_F(3, 10));
  CHECK(std::abs(r.mu - (1.0 + std::sqrt(10.0))) < 1e-9);
  CHECK(std::abs(dense_spectral_radius(build_F(3, 10)).mu - (1.0 + std::sqrt(10.0))) < 1e-12);
}

TEST_CASE("Perron vector of a triangle") {
  const auto r = perron_vector(complete_graph(3));
  REQUIRE(r.vector);
  for (double x : *r.vector) CHECK(x == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-9));
}

TEST_CASE("Perron vector is unit, nonnegative, and an eigenvector") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = testing::random_connected(3 + trial % 40, 0.15, rng);
    const auto r = perron_vector(g);
    REQUIRE(r.vector);
    const double norm = std::sqrt(std::inner_product(r.vector->begin(), r.vector->end(), r.vector->begin(), 0.0));
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-12));
    for (double x : *r.vector) CHECK(x >= 0.0);
    CHECK(residual_of(g, r) <= 1e-9);
    CHECK(r.residual <= kDefaultTolerance);
  }
}

TEST_CASE("bipartite graphs converge under the shift") {
  CHECK(spectral_radius(cycle_graph(10)).mu == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(spectral_radius(complete_bipartite(3, 12)).mu == doctest::Approx(6.0).epsilon(1e-10));
  CHECK(spectral_radius(path_graph(2)).mu == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("disconnected graphs take the component maximum") {
  const Graph g = disjoint_union(complete_graph(4), star_graph(17));
  const auto r = spectral_radius(g);
  CHECK(r.mu == doctest::Approx(4.0).epsilon(1e-10));
  CHECK_FALSE(r.vector.has_value());
  CHECK_THROWS_AS(perron_vector(g), PreconditionError);
  CHECK(spectral_radius(empty_graph(5)).mu == 0.0);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(spectral_radius(Graph(0)), DomainError);
  CHECK_THROWS_AS(spectral_radius(complete_graph(3), 0.0), DomainError);
  CHECK_THROWS_AS(spectral_radius(complete_graph(3), -1.0), DomainError);
}

TEST_CASE("dense route agrees with power iteration") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = testing::random_graph(2 + trial % 50, 0.2, rng);
    const double power = spectral_radius(g).mu;
    const auto dense = dense_spectral_radius(g);
    CHECK(std::abs(power - dense.mu) < 1e-8);
    CHECK(dense.dense_fallback);
  }
}

#ifdef K2T_HAVE_EIGEN
TEST_CASE("agreement with a self-adjoint eigensolver") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = 2 + trial;
    const Graph g = testing::random_graph(n, trial % 2 ? 0.08 : 0.35, rng);
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (auto [u, v] : g.edges()) a(u, v) = a(v, u) = 1.0;
    const double reference = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(a).eigenvalues().maxCoeff();
    CHECK(std::abs(spectral_radius(g).mu - reference) < 1e-8);
    if (n <= 64) CHECK(std::abs(dense_spectral_radius(g).mu - reference) < 1e-9);
  }
}
#endif

TEST_CASE("edge weight sums") {
  const std::vector<double> ones{1.0, 1.0, 1.0};
  CHECK(edge_weight_sum(complete_graph(3), ones) == 3.0);
  const std::vector<double> zeros(7, 0.0);
  CHECK(edge_weight_sum(cycle_graph(7), zeros) == 0.0);
  CHECK_THROWS_AS(edge_weight_sum(complete_graph(4), ones), PreconditionError);

  // x^T A x = 2 * sum over edges, which equals mu for the unit Perron vector.
  const Graph f = build_F(4, 23);
  const auto r = perron_vector(f);
  CHECK(2.0 * edge_weight_sum(f, *r.vector) == doctest::Approx(r.mu).epsilon(1e-10));
}

TEST_CASE("larger sparse graphs") {
  const Graph f = build_F(6, 2000);
  const auto r = spectral_radius(f);
  CHECK(std::abs(r.mu - ft_mu_exact(6, 2000)) < 1e-8);
  CHECK(spectral_radius(cycle_graph(500)).mu == doctest::Approx(2.0).epsilon(1e-9));
}
