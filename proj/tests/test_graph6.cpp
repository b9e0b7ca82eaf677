#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "spex/graph6.hpp"

using namespace spex;

TEST_CASE("hand-decoded lines") {
  // 'D' header gives n=5; payload bits 000000 111100 put the four edges
  // (0,4),(1,4),(2,4),(3,4): the star with center 4
  Graph star = graph6_decode("D?{");
  CHECK(star.vertex_count() == 5);
  CHECK(star.edge_count() == 4);
  for (int u = 0; u < 4; ++u) {
    CHECK(star.has_edge(u, 4));
    for (int v = u + 1; v < 4; ++v) CHECK_FALSE(star.has_edge(u, v));
  }
  CHECK(graph6_encode(star) == "D?{");

  Graph k2 = graph6_decode("A_");
  CHECK(k2 == Graph::complete(2));
  CHECK(graph6_encode(Graph::complete(2)) == "A_");

  CHECK(graph6_decode("@").vertex_count() == 1);
  CHECK(graph6_decode("?").vertex_count() == 0);
  CHECK(graph6_encode(Graph(0)) == "?");
}

TEST_CASE("round trip on random graphs") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = static_cast<int>(rng() % 51);
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() & 1) g.add_edge(a, b);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("extended header sizes") {
  Graph g(63);
  g.add_edge(0, 62);
  std::string line = graph6_encode(g);
  CHECK(line[0] == '~');
  CHECK(graph6_decode(line) == g);

  Graph big(500);
  for (int i = 0; i + 1 < 500; i += 7) big.add_edge(i, i + 1);
  CHECK(graph6_decode(graph6_encode(big)) == big);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
  CHECK_THROWS_AS(graph6_decode("D?"), std::invalid_argument);    // short payload
  CHECK_THROWS_AS(graph6_decode("D?{?"), std::invalid_argument);  // long payload
  CHECK_THROWS_AS(graph6_decode("A\x1f"), std::invalid_argument); // byte below 63
  CHECK_THROWS_AS(graph6_decode("A\x7f"), std::invalid_argument); // byte above 126
  CHECK_THROWS_AS(graph6_decode("B@"), std::invalid_argument);    // nonzero padding
  CHECK_THROWS_AS(graph6_decode("~"), std::invalid_argument);     // truncated header
  CHECK_THROWS_AS(graph6_decode("~?^O"), std::length_error);      // n=2000 beyond capacity
}
