#include <doctest.h>

#include <random>
#include <sstream>

#include "k2t/errors.hpp"
#include "k2t/extremal.hpp"
#include "k2t/graph6.hpp"
#include "support.hpp"

using namespace k2t;

// Reference strings produced by networkx.to_graph6_bytes.
TEST_CASE("known encodings") {
  CHECK(write_graph6(complete_graph(5)) == "D~{");
  CHECK(write_graph6(Graph(1)) == "@");
  CHECK(write_graph6(Graph(2)) == "A?");
  CHECK(write_graph6(path_graph(4)) == "Ch");
  CHECK(write_graph6(cycle_graph(5)) == "Dhc");
  CHECK(write_graph6(star_graph(5)) == "Ds_");
  CHECK(write_graph6(build_F(3, 10)) == "I~aK[A@_W");
  CHECK(write_graph6(Graph(0)) == "?");
}

TEST_CASE("known decodings") {
  const Graph k5 = parse_graph6("D~{");
  CHECK(k5.order() == 5);
  CHECK(k5.size() == 10);

  const Graph a = parse_graph6("A_");
  CHECK(a.order() == 2);
  CHECK(a.size() == 1);

  CHECK(parse_graph6("@").order() == 1);
  CHECK(parse_graph6("I~aK[A@_W") == build_F(3, 10));
}

TEST_CASE("extended header above 62 vertices") {
  const std::string p70 = write_graph6(path_graph(70));
  CHECK(p70.rfind("~?@E", 0) == 0);
  CHECK(parse_graph6(p70) == path_graph(70));

  const std::string k63 = write_graph6(complete_graph(63));
  CHECK(k63.size() == 330);
  CHECK(k63.rfind("~??~~~~~~~", 0) == 0);
  CHECK(parse_graph6(k63) == complete_graph(63));
}

TEST_CASE("optional header and line endings") {
  CHECK(parse_graph6(">>graph6<<D~{") == complete_graph(5));
  CHECK(parse_graph6("D~{\n") == complete_graph(5));
  CHECK(parse_graph6("D~{\r\n") == complete_graph(5));
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(11);
  for (std::size_t n : {0, 1, 2, 5, 7, 8, 13, 62, 63, 64, 65, 130}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Graph g = testing::random_graph(n, 0.3, rng);
      CHECK(parse_graph6(write_graph6(g)) == g);
    }
  }
}

TEST_CASE("malformed input names the byte offset") {
  auto offset_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("D~") == 2);      // truncated
  CHECK(offset_of("D~{?") == 3);    // trailing garbage
  CHECK(offset_of("D~|") == 2);     // nonzero padding bits
  CHECK(offset_of("D\x01{") == 1);  // byte below 63
  CHECK(offset_of("~?@") == 3);     // truncated extended header
  CHECK(offset_of("~??D~{") >= 0);  // extended header for a small order
  CHECK(offset_of("~~??????????") >= 0);
  CHECK_THROWS_AS(parse_graph6("D~{ "), ParseError);
}

TEST_CASE("stream reader") {
  std::istringstream in("D~{\n\nCh\r\nDhc\n");
  std::vector<Graph> got;
  read_graph6_stream(in, [&](Graph g) { got.push_back(std::move(g)); });
  REQUIRE(got.size() == 3);
  CHECK(got[0] == complete_graph(5));
  CHECK(got[1] == path_graph(4));
  CHECK(got[2] == cycle_graph(5));

  std::istringstream bad("D~{\nD~\n");
  try {
    read_graph6_stream(bad, [](Graph) {});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}
