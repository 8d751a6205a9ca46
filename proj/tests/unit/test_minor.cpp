#include <doctest.h>

#include <random>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/minor.hpp"
#include "k2t/search.hpp"
#include "support.hpp"

using namespace k2t;

namespace {

void check_model(const Graph& g, const Graph& h, const MinorWitness& w) {
  REQUIRE(w.verdict == Verdict::present);
  const auto problem = witness_violation(g, h, w);
  CHECK_MESSAGE(!problem, *problem);
}

}  // namespace

TEST_CASE("documented instances") {
  const auto c5 = has_minor(cycle_graph(5), complete_graph(3));
  check_model(cycle_graph(5), complete_graph(3), c5);
  CHECK_FALSE(has_minor(complete_graph(4), complete_bipartite(2, 3)).present());
  CHECK_FALSE(has_minor(build_F(3, 10), complete_bipartite(2, 3)).present());
  CHECK(has_minor_oracle(complete_graph(5), complete_bipartite(2, 3)));
  CHECK_FALSE(has_minor_oracle(path_graph(6), complete_graph(3)));
}

TEST_CASE("K_{2,t} test with shortcuts") {
  const Graph w5 = testing::wheel(4);
  const auto r = k2t_minor_test(w5, 3);
  CHECK(r.present());
  CHECK(k2t_subgraph_test(w5, 3));

  for (int t = 2; t <= 5; ++t) {
    CHECK(k2t_minor_test(complete_bipartite(2, static_cast<std::size_t>(t)), t).present());
    for (std::int64_t n = t + 1; n <= 60; ++n) CHECK(k2t_minor_test(build_F(t, n), t).verdict == Verdict::absent);
  }

  CHECK(k2t_subgraph_test(cycle_graph(4), 2));
  CHECK_FALSE(k2t_subgraph_test(build_F(3, 10), 3));
  CHECK_FALSE(k2t_subgraph_test(path_graph(9), 2));
  CHECK_FALSE(k2t_subgraph_test(star_graph(9), 2));
  CHECK_THROWS_AS(k2t_minor_test(cycle_graph(4), 1), DomainError);
}

TEST_CASE("density shortcut and forced witnesses") {
  const Graph k7 = complete_graph(7);
  CHECK(k2t_minor_test(k7, 3).verdict == Verdict::present_by_density);
  const auto w = k2t_minor_test(k7, 3, true);
  check_model(k7, complete_bipartite(2, 3), w);

  // Three internally disjoint 0-1 paths of length 3: a K_{2,3} minor without
  // a pair of vertices sharing three neighbors.
  Graph theta(8);
  for (VertexId k = 0; k < 3; ++k) {
    const auto x = static_cast<VertexId>(2 + 2 * k);
    theta.add_edge(0, x);
    theta.add_edge(x, x + 1);
    theta.add_edge(x + 1, 1);
  }
  CHECK_FALSE(k2t_subgraph_test(theta, 3));

  // C6 plus a long chord is outerplanar.
  Graph chorded = cycle_graph(6);
  chorded.add_edge(0, 3);
  CHECK(k2t_minor_test(chorded, 3).verdict == Verdict::absent);
  const auto m = k2t_minor_test(theta, 3);
  check_model(theta, complete_bipartite(2, 3), m);
}

TEST_CASE("witnesses from the engine validate") {
  std::mt19937_64 rng(41);
  const std::vector<Graph> patterns{complete_graph(3), complete_graph(4), complete_bipartite(2, 3),
                                    complete_bipartite(1, 3), cycle_graph(5), complete_bipartite(3, 3)};
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::random_graph(5 + trial % 12, 0.25, rng);
    for (const Graph& h : patterns) {
      const auto w = has_minor(g, h);
      if (w.present()) check_model(g, h, w);
    }
  }
}

TEST_CASE("validator rejects broken models") {
  const Graph g = cycle_graph(5);
  const Graph h = complete_graph(3);
  MinorWitness w{Verdict::present, {{0}, {1}, {2, 3, 4}}};
  CHECK_FALSE(witness_violation(g, h, w).has_value());

  MinorWitness overlap{Verdict::present, {{0}, {0, 1}, {2, 3, 4}}};
  CHECK(witness_violation(g, h, overlap).has_value());
  MinorWitness disconnected{Verdict::present, {{0}, {1}, {2, 4}}};
  CHECK(witness_violation(g, h, disconnected).has_value());
  MinorWitness missing_edge{Verdict::present, {{0}, {2}, {3, 4}}};
  CHECK(witness_violation(g, h, missing_edge).has_value());
  MinorWitness short_list{Verdict::present, {{0}, {1}}};
  CHECK(witness_violation(g, h, short_list).has_value());
  MinorWitness empty_set{Verdict::present, {{}, {1}, {2, 3, 4}}};
  CHECK(witness_violation(g, h, empty_set).has_value());
}

TEST_CASE("engine matches the oracle on every connected graph up to 6 vertices") {
  const std::vector<Graph> patterns{complete_graph(3), complete_bipartite(1, 3), complete_bipartite(2, 2),
                                    complete_bipartite(2, 3), complete_graph(4), cycle_graph(5)};
  for (const Graph& h : patterns) {
    MinorOracle oracle(h);
    for (std::size_t n = 1; n <= 6; ++n)
      for (const Graph& g : enumerate_connected(n)) CHECK(has_minor(g, h).present() == oracle.contains(g));
  }
}

TEST_CASE("minor order is monotone under edge addition and contraction") {
  std::mt19937_64 rng(43);
  const Graph h = complete_bipartite(2, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(9, 0.3, rng);
    const bool present = has_minor(g, h).present();
    if (present) {
      Graph bigger = g;
      bigger.add_edge(0, 8);
      CHECK(has_minor(bigger, h).present());
    } else {
      for (const Edge& e : g.edges()) CHECK_FALSE(has_minor(contract_edge(g, e.u, e.v), h).present());
    }
  }
}

TEST_CASE("verdict is invariant under relabeling") {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(10, 0.3, rng);
    const Graph p = relabel(g, testing::random_permutation(10, rng));
    CHECK(has_minor(g, complete_bipartite(2, 3)).present() == has_minor(p, complete_bipartite(2, 3)).present());
    CHECK(has_minor(g, complete_graph(4)).present() == has_minor(p, complete_graph(4)).present());
  }
}

TEST_CASE("pieces larger than one word are split into blocks") {
  // A long chain of triangles: 2-connected blocks are tiny.
  Graph g(201);
  for (VertexId v = 0; v + 2 < 201; v += 2) {
    g.add_edge(v, v + 1);
    g.add_edge(v + 1, v + 2);
    g.add_edge(v, v + 2);
  }
  CHECK_FALSE(has_minor(g, complete_bipartite(2, 3)).present());
  CHECK_FALSE(has_minor(g, complete_bipartite(2, 2)).present());
  CHECK(has_minor(g, complete_graph(3)).present());
  CHECK_THROWS_AS(has_minor(cycle_graph(100), complete_bipartite(2, 2)), CapabilityError);
}

TEST_CASE("capability limits") {
  CHECK_THROWS_AS(has_minor(complete_graph(14), complete_graph(13)), CapabilityError);
  CHECK_THROWS_AS(MinorOracle(complete_graph(9)), CapabilityError);
  MinorOracle oracle(complete_graph(3));
  CHECK_THROWS_AS(oracle.contains(cycle_graph(9)), CapabilityError);
}

TEST_CASE("oracle memo is shared across queries") {
  MinorOracle oracle(complete_bipartite(2, 3));
  CHECK(oracle.contains(complete_graph(5)));
  const std::size_t after_first = oracle.cache_size();
  CHECK(after_first > 0);
  CHECK(oracle.contains(complete_graph(5)));
  CHECK(oracle.cache_size() == after_first);
  CHECK(oracle.pattern() == complete_bipartite(2, 3));
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::present) == "present");
  CHECK(to_string(Verdict::present_by_density) == "present_by_density");
  CHECK(to_string(Verdict::absent) == "absent");
}
