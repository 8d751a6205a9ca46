#include <doctest.h>

#include <algorithm>
#include <random>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/graph6.hpp"
#include "k2t/minor.hpp"
#include "k2t/search.hpp"
#include "k2t/verify.hpp"
#include "support.hpp"

using namespace k2t;

namespace {

const AuditCheck& find(const AuditReport& r, const std::string& id) {
  for (const AuditCheck& c : r.checks)
    if (c.id == id) return c;
  FAIL("missing check " << id);
  return r.checks.front();
}

}  // namespace

TEST_CASE("report layout") {
  const AuditReport r = audit(build_F(3, 10), 3);
  REQUIRE(r.checks.size() == 7);
  for (std::size_t i = 0; i < 7; ++i) CHECK(r.checks[i].id == "C" + std::to_string(i + 1));
}

TEST_CASE("F_3(10) passes every check") {
  const AuditReport r = audit(build_F(3, 10), 3);
  for (const AuditCheck& c : r.checks) {
    CHECK_MESSAGE(c.applicable, c.id);
    CHECK_MESSAGE(c.pass, c.id);
  }
  const AuditCheck& c6 = find(r, "C6");
  CHECK(c6.lhs == doctest::Approx(9.0).epsilon(1e-9));
  CHECK(c6.rhs == 9.0);
  CHECK(r.all_applicable_pass());
}

TEST_CASE("star with t = 3") {
  const AuditReport r = audit(star_graph(10), 3);
  for (const char* id : {"C1", "C2", "C3", "C4", "C5", "C6"}) {
    const AuditCheck& c = find(r, id);
    if (c.applicable) CHECK_MESSAGE(c.pass, id);
  }
  const AuditCheck& c6 = find(r, "C6");
  REQUIRE(c6.applicable);
  CHECK(c6.lhs == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(c6.rhs == 9.0);
  CHECK(r.all_applicable_pass());
}

TEST_CASE("applicability gates") {
  const AuditReport c4 = audit(cycle_graph(4), 2);
  CHECK_FALSE(find(c4, "C1").applicable);
  CHECK_FALSE(find(c4, "C1").pass);
  CHECK_FALSE(find(c4, "C5").applicable);

  const AuditReport split = audit(disjoint_union(complete_graph(3), path_graph(3)), 3);
  CHECK(find(split, "C1").applicable);
  CHECK_FALSE(find(split, "C3").applicable);
  CHECK_FALSE(find(split, "C4").applicable);
  CHECK_FALSE(find(split, "C6").applicable);
  CHECK_FALSE(find(split, "C7").applicable);

  // mu^2 = 4 <= n - 1 = 4 on C_5: C4 is gated off.
  CHECK_FALSE(find(audit(cycle_graph(5), 3), "C4").applicable);

  for (const AuditReport& r : {c4, split})
    for (const AuditCheck& c : r.checks)
      if (!c.applicable) CHECK_FALSE(c.pass);
  CHECK_THROWS_AS(audit(complete_graph(3), 1), DomainError);
}

TEST_CASE("every applicable check passes on the small minor-free corpus") {
  for (std::size_t n = 2; n <= 7; ++n) {
    for (const Graph& g : enumerate_connected(n)) {
      if (k2t_minor_test(g, 3).verdict != Verdict::absent) continue;
      CHECK(audit(g, 3).all_applicable_pass());
    }
  }
}

TEST_CASE("every applicable check passes on the extremal family") {
  for (int t = 2; t <= 5; ++t)
    for (std::int64_t n = t + 1; n <= 60; ++n) CHECK(audit(build_F(t, n), t).all_applicable_pass());
}

TEST_CASE("audit is deterministic") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = testing::random_connected(12, 0.1, rng);
    CHECK(to_jsonl(audit(g, 3)) == to_jsonl(audit(g, 3)));
    CHECK(to_table(audit(g, 3)) == to_table(audit(g, 3)));
  }
}

TEST_CASE("hub check") {
  for (int t = 2; t <= 5; ++t)
    for (std::int64_t n = t + 1; n <= 40; ++n) CHECK(lemma1_hub_check(build_F(t, n), t));
  CHECK_FALSE(lemma1_hub_check(path_graph(4), 2));
  CHECK(lemma1_hub_check(star_graph(7), 3));
  CHECK_THROWS_AS(lemma1_hub_check(empty_graph(3), 3), PreconditionError);
}

TEST_CASE("hub check on exhaustive argmax graphs") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (const auto& rec : exhaustive_max(enumerate_connected(n), 3).argmax) {
      const Graph g = parse_graph6(rec.graph6);
      if (dominating_vertex(g)) CHECK(lemma1_hub_check(g, 3));
    }
  }
}

TEST_CASE("serialization") {
  const AuditReport r = audit(build_F(3, 10), 3);
  const std::string lines = to_jsonl(r);
  CHECK(std::count(lines.begin(), lines.end(), '\n') == 7);
  CHECK(lines.rfind(R"({"check":"C1","name":"two-walks","applicable":true,"pass":true,"lhs":2.0,"rhs":2.0)", 0) == 0);
  const std::string labeled = to_jsonl(r, "I~aK[A@_W");
  CHECK(labeled.rfind(R"({"graph6":"I~aK[A@_W","check":"C1")", 0) == 0);

  const std::string table = to_table(r);
  CHECK(table.find("C6") != std::string::npos);
  CHECK(table.find("FAIL") == std::string::npos);
  CHECK(to_table(audit(cycle_graph(4), 2)).find("n/a") != std::string::npos);
}
