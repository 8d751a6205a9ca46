#include <doctest.h>

#include <algorithm>
#include <random>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/graph.hpp"
#include "support.hpp"

using namespace k2t;

TEST_CASE("named families") {
  const Graph k4 = complete_graph(4);
  CHECK(k4.size() == 6);
  for (VertexId v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

  const Graph p4 = path_graph(4);
  CHECK(p4.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});

  const Graph s5 = star_graph(5);
  CHECK(s5.degree(0) == 4);
  for (VertexId v = 1; v < 5; ++v) CHECK(s5.degree(v) == 1);

  CHECK(cycle_graph(5).size() == 5);
  CHECK(empty_graph(0).order() == 0);
  CHECK_THROWS_AS(cycle_graph(2), DomainError);
  CHECK_THROWS_AS(complete_graph(0), DomainError);
}

TEST_CASE("edge operations and bounds checks") {
  Graph g(3);
  g.add_edge(0, 2);
  CHECK(g.has_edge(2, 0));
  g.add_edge(0, 2);
  CHECK(g.size() == 1);
  g.remove_edge(2, 0);
  CHECK(g.size() == 0);
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
  CHECK_THROWS_AS(Graph(Graph::kMaxOrder + 1), CapabilityError);
}

TEST_CASE("rows spanning several words") {
  Graph g(130);
  g.add_edge(0, 129);
  g.add_edge(64, 65);
  CHECK(g.words_per_row() == 3);
  CHECK(g.neighbors(129) == std::vector<VertexId>{0});
  CHECK(g.degree(64) == 1);
  CHECK(g.size() == 2);
}

TEST_CASE("join") {
  CHECK(join(complete_graph(1), complete_graph(3)) == complete_graph(4));
  CHECK(join(complete_graph(1), empty_graph(4)) == star_graph(5));

  const Graph triangles = disjoint_union(disjoint_union(complete_graph(3), complete_graph(3)), complete_graph(3));
  const Graph f = join(complete_graph(1), triangles);
  CHECK(f.degree(0) == 9);
  CHECK(f == build_F(3, 10));

  const Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.size() == 6);
  CHECK(k23.degree(0) == 3);
  CHECK(k23.degree(4) == 2);
}

TEST_CASE("disjoint union") {
  const Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  CHECK(two.order() == 6);
  CHECK(two.size() == 6);
  CHECK(components(two).size() == 2);
  CHECK(disjoint_union(cycle_graph(5), empty_graph(0)) == cycle_graph(5));
}

TEST_CASE("contraction") {
  CHECK(contract_edge(cycle_graph(4), 0, 1) == complete_graph(3));
  CHECK(contract_edge(complete_graph(4), 2, 3) == complete_graph(3));
  CHECK(contract_edge(path_graph(4), 1, 2) == path_graph(3));
  CHECK_THROWS_AS(contract_edge(path_graph(4), 0, 2), PreconditionError);
  CHECK_THROWS_AS(contract_edge(path_graph(4), 1, 1), PreconditionError);
}

TEST_CASE("components") {
  const auto two = components(disjoint_union(complete_graph(3), complete_graph(3)));
  REQUIRE(two.size() == 2);
  CHECK(two[0].size() == 3);
  CHECK(two[1].size() == 3);
  CHECK(components(cycle_graph(7)).size() == 1);
  CHECK(components(cycle_graph(7))[0].size() == 7);

  const auto blocks = components(remove_vertex(build_F(3, 10), 0));
  REQUIRE(blocks.size() == 3);
  const Graph rest = remove_vertex(build_F(3, 10), 0);
  for (const auto& b : blocks) CHECK(induced_subgraph(rest, b) == complete_graph(3));
}

TEST_CASE("biconnected blocks") {
  // Bowtie: two triangles sharing vertex 0.
  const Graph bowtie = build_F(2, 5);
  const auto blocks = biconnected_blocks(bowtie);
  CHECK(blocks == std::vector<std::vector<VertexId>>{{0, 1, 2}, {0, 3, 4}});
  CHECK_FALSE(is_biconnected(bowtie));

  CHECK(biconnected_blocks(path_graph(4)).size() == 3);
  CHECK(is_biconnected(cycle_graph(6)));
  CHECK(is_biconnected(complete_bipartite(2, 3)));
  CHECK_FALSE(is_biconnected(complete_graph(2)));
}

TEST_CASE("biconnected blocks cover every edge exactly once") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(12, 0.2, rng);
    std::size_t covered = 0;
    for (const auto& b : biconnected_blocks(g)) {
      const Graph h = induced_subgraph(g, b);
      covered += h.size();
      if (b.size() >= 3) CHECK(is_biconnected(h));
    }
    CHECK(covered == g.size());
  }
}

TEST_CASE("common neighbors") {
  const Graph f = build_F(3, 10);
  CHECK(common_neighbor_count(f, 1, 2) == 2);
  CHECK(max_common_neighbors(f) == 2);
  CHECK(common_neighbor_count(star_graph(5), 2, 4) == 1);
  CHECK(common_neighbor_count(path_graph(3), 0, 2) == 1);
  CHECK_THROWS_AS(common_neighbor_count(f, 3, 3), PreconditionError);
}

TEST_CASE("degree helpers") {
  CHECK(max_degree_vertex(star_graph(6)) == 0);
  CHECK(max_degree_vertex(path_graph(5)) == 1);
  CHECK(dominating_vertex(build_F(4, 13)) == VertexId{0});
  CHECK_FALSE(dominating_vertex(cycle_graph(5)).has_value());
}

TEST_CASE("relabel preserves structure") {
  std::mt19937_64 rng(3);
  const Graph g = testing::random_graph(9, 0.4, rng);
  const auto perm = testing::random_permutation(9, rng);
  const Graph h = relabel(g, perm);
  CHECK(h.size() == g.size());
  for (auto [u, v] : g.edges()) CHECK(h.has_edge(perm[u], perm[v]));
  CHECK_THROWS_AS(relabel(g, std::vector<VertexId>{0, 1}), PreconditionError);
}

TEST_CASE("induced subgraph and vertex removal") {
  const Graph c6 = cycle_graph(6);
  const Graph cut = remove_vertex(c6, 2);
  CHECK(cut.order() == 5);
  CHECK(cut.size() == 4);
  CHECK(is_connected(cut));
  CHECK(cut.has_edge(4, 0));
  const std::vector<VertexId> keep{0, 1, 2};
  CHECK(induced_subgraph(c6, keep) == path_graph(3));
  const std::vector<VertexId> repeated{0, 0};
  CHECK_THROWS_AS(induced_subgraph(c6, repeated), PreconditionError);
}
