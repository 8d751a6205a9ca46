#include <benchmark/benchmark.h>

#include <random>

#include "k2t/extremal.hpp"
#include "k2t/minor.hpp"
#include "k2t/search.hpp"
#include "k2t/spectral.hpp"

using namespace k2t;

static void BM_SpectralRadiusFt(benchmark::State& state) {
  const Graph g = build_F(4, state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).mu);
}
BENCHMARK(BM_SpectralRadiusFt)->Arg(50)->Arg(500)->Arg(5000);

static void BM_SpectralRadiusPath(benchmark::State& state) {
  // Slow case for power iteration: small spectral gap.
  const Graph g = path_graph(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(g).mu);
}
BENCHMARK(BM_SpectralRadiusPath)->Arg(16)->Arg(64);

static void BM_DenseSpectralRadius(benchmark::State& state) {
  std::mt19937_64 rng(1);
  std::bernoulli_distribution coin(0.3);
  const auto n = static_cast<std::size_t>(state.range(0));
  Graph g(n);
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  for (auto _ : state) benchmark::DoNotOptimize(dense_spectral_radius(g).mu);
}
BENCHMARK(BM_DenseSpectralRadius)->Arg(16)->Arg(64);

static void BM_FtMuExact(benchmark::State& state) {
  std::int64_t n = 1638400;
  for (auto _ : state) {
    benchmark::DoNotOptimize(ft_mu_exact(4, n));
    n = n == 1638410 ? 1638400 : n + 1;
  }
}
BENCHMARK(BM_FtMuExact);

static void BM_K23MinorTest(benchmark::State& state) {
  std::mt19937_64 rng(2);
  std::bernoulli_distribution coin(0.25);
  std::vector<Graph> graphs;
  for (int i = 0; i < 64; ++i) {
    Graph g(static_cast<std::size_t>(state.range(0)));
    for (VertexId u = 0; u < g.order(); ++u)
      for (VertexId v = u + 1; v < g.order(); ++v)
        if (coin(rng)) g.add_edge(u, v);
    graphs.push_back(std::move(g));
  }
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(has_minor(graphs[i++ % graphs.size()], complete_bipartite(2, 3)));
}
BENCHMARK(BM_K23MinorTest)->Arg(8)->Arg(12)->Arg(16);

static void BM_OracleK23(benchmark::State& state) {
  const auto graphs = enumerate_connected(7);
  for (auto _ : state) {
    MinorOracle oracle(complete_bipartite(2, 3));
    std::size_t hits = 0;
    for (const Graph& g : graphs) hits += oracle.contains(g);
    benchmark::DoNotOptimize(hits);
  }
}
BENCHMARK(BM_OracleK23)->Unit(benchmark::kMillisecond);

static void BM_EnumerateConnected(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_connected(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_EnumerateConnected)->DenseRange(5, 8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
