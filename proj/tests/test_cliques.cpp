#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "spex/cliques.hpp"
#include "spex/graph.hpp"

using namespace spex;

namespace {

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
  }
  return g;
}

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  Graph g(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(a, b);
  return g;
}

// naive freeness oracle: scan all k-subsets of the clique list for a
// pairwise-disjoint one
bool naive_free(const Graph& g, int k, int r) {
  auto enumerated = enumerate_cliques(g, r + 1);
  const auto& cliques = enumerated.cliques;
  std::vector<int> idx(k, 0);
  std::function<bool(int, int, std::uint64_t)> rec = [&](int depth, int from,
                                                         std::uint64_t used) -> bool {
    if (depth == k) return true;
    for (int i = from; i < static_cast<int>(cliques.size()); ++i) {
      std::uint64_t mask = 0;
      for (int v : cliques[i]) mask |= 1ULL << v;
      if (mask & used) continue;
      if (rec(depth + 1, i + 1, used | mask)) return true;
    }
    return false;
  };
  return !rec(0, 0, 0);
}

}  // namespace

TEST_CASE("clique enumeration") {
  auto k4 = enumerate_cliques(Graph::complete(4), 3);
  CHECK(k4.cliques.size() == 4);
  CHECK_FALSE(k4.truncated);
  CHECK(std::is_sorted(k4.cliques.begin(), k4.cliques.end()));  // lexicographic

  CHECK(enumerate_cliques(petersen(), 3).cliques.empty());

  auto t63 = enumerate_cliques(turan_graph(6, 3), 3);
  CHECK(t63.cliques.size() == 8);

  auto capped = enumerate_cliques(Graph::complete(4), 3, 2);
  CHECK(capped.truncated);
  CHECK(capped.cliques.size() == 2);

  auto singles = enumerate_cliques(Graph(3), 1);
  CHECK(singles.cliques.size() == 3);
  CHECK_THROWS_AS(enumerate_cliques(Graph(3), 0), std::invalid_argument);
}

TEST_CASE("disjoint packing search") {
  Graph two_triangles = disjoint_copies(Graph::complete(3), 2);
  auto packing = find_disjoint_packing(two_triangles, 2, 2);
  REQUIRE(packing.has_value());
  CHECK(validate_packing(two_triangles, *packing, 2));

  CHECK_FALSE(find_disjoint_packing(Graph::complete(5), 2, 2).has_value());

  Graph g = join(Graph::complete(1), turan_graph(9, 2));
  g.add_edge(1, 2);  // inside the first class
  auto found = find_disjoint_packing(g, 2, 2);
  REQUIRE(found.has_value());
  CHECK(validate_packing(g, *found, 2));
}

TEST_CASE("freeness verdicts") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 1; r <= 3; ++r)
      CHECK(is_free(Graph::complete(k * (r + 1) - 1), k, r).free);

  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k)
      for (int n = k * (r + 1); n <= 24; n += 5)
        CHECK(is_free(clique_join_turan(n, k, r), k, r).free);

  CHECK(is_free(petersen(), 1, 2).free);

  auto verdict = is_free(disjoint_copies(Graph::complete(3), 2), 2, 2);
  CHECK_FALSE(verdict.free);
  REQUIRE(verdict.witness.has_value());
  CHECK(validate_packing(disjoint_copies(Graph::complete(3), 2), *verdict.witness, 2));
}

TEST_CASE("freeness agrees with the naive oracle") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 4 + static_cast<int>(rng() % 6);
    Graph g = random_graph(n, rng, std::uniform_real_distribution<double>(0.2, 0.95)(rng));
    int k = 1 + static_cast<int>(rng() % 2);
    int r = 1 + static_cast<int>(rng() % 3);
    auto verdict = is_free(g, k, r);
    CHECK(verdict.free == naive_free(g, k, r));
    if (!verdict.free) CHECK(validate_packing(g, *verdict.witness, k));
  }
}

TEST_CASE("freeness is monotone under edge addition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(8, rng, 0.6);
    if (is_free(g, 2, 2).free) continue;
    std::vector<std::pair<int, int>> missing;
    for (int a = 0; a < 8; ++a)
      for (int b = a + 1; b < 8; ++b)
        if (!g.has_edge(a, b)) missing.emplace_back(a, b);
    if (missing.empty()) continue;
    auto [a, b] = missing[rng() % missing.size()];
    g.add_edge(a, b);
    CHECK_FALSE(is_free(g, 2, 2).free);
  }
}

TEST_CASE("cliques through an edge") {
  Graph k8 = Graph::complete(8);
  auto three = cliques_through_edge(k8, 0, 1, 2, 3);
  CHECK(three.size() == 3);
  std::vector<char> seen(8, 0);
  for (const auto& clique : three) {
    CHECK(clique.size() == 3);
    for (int v : clique)
      if (v != 0 && v != 1) {
        CHECK_FALSE(seen[v]);  // pairwise intersection is exactly {0,1}
        seen[v] = 1;
      }
  }

  Graph c5(5);
  for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
  CHECK(cliques_through_edge(c5, 0, 1, 2, 1).empty());

  Graph t93 = turan_graph(9, 3);
  t93.add_edge(0, 1);  // inside the first class
  CHECK(cliques_through_edge(t93, 0, 1, 2, 2).size() >= 2);

  CHECK_THROWS_AS(cliques_through_edge(c5, 0, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("cliques through a vertex") {
  // friendship graph: three triangles sharing vertex 0
  Graph f3(7);
  for (int i = 0; i < 3; ++i) {
    f3.add_edge(0, 1 + 2 * i);
    f3.add_edge(0, 2 + 2 * i);
    f3.add_edge(1 + 2 * i, 2 + 2 * i);
  }
  auto fans = cliques_through_vertex(f3, 0, 2, 3);
  CHECK(fans.size() == 3);

  Graph star = complete_multipartite({1, 4});
  CHECK(cliques_through_vertex(star, 1, 2, 1).empty());  // a leaf

  Graph g = join(Graph::complete(1), turan_graph(12, 2));
  CHECK(cliques_through_vertex(g, 0, 2, 4).size() == 4);

  CHECK_THROWS_AS(cliques_through_vertex(star, 9, 2, 1), std::out_of_range);
}

TEST_CASE("packing validator rejects bad certificates") {
  Graph g = disjoint_copies(Graph::complete(3), 2);
  CliquePacking p;
  p.r = 2;
  p.cliques = {{0, 1, 2}, {3, 4, 5}};
  CHECK(validate_packing(g, p, 2));
  p.cliques = {{0, 1, 2}, {2, 3, 4}};  // overlap
  CHECK_FALSE(validate_packing(g, p, 2));
  p.cliques = {{0, 1, 2}, {3, 4, 5}, {0, 1, 2}};  // wrong count
  CHECK_FALSE(validate_packing(g, p, 2));
  p.cliques = {{0, 1, 2}, {3, 4, 6}};  // not a clique (6 not adjacent)
  CHECK_FALSE(validate_packing(g, p, 2));
}

TEST_CASE("delta oracle matches from-scratch verdicts") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 6 + static_cast<int>(rng() % 5);
    Graph g = random_graph(n, rng, 0.5);
    int k = 1 + static_cast<int>(rng() % 2);
    int r = 1 + static_cast<int>(rng() % 2);
    DeltaPackingOracle oracle(g, k, r);
    for (int probe = 0; probe < 6; ++probe) {
      int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
      if (a == b) continue;
      if (!g.has_edge(a, b)) {
        Graph variant = g;
        variant.add_edge(a, b);
        auto fast = oracle.with_added_edge(std::min(a, b), std::max(a, b));
        CHECK(fast.has_value() == find_disjoint_packing(variant, k, r).has_value());
        if (fast) CHECK(validate_packing(variant, *fast, k));
        // swap against a random existing edge
        std::vector<std::pair<int, int>> edges;
        g.for_each_edge([&](int u, int v) { edges.emplace_back(u, v); });
        if (!edges.empty()) {
          auto [u, v] = edges[rng() % edges.size()];
          if (!((u == std::min(a, b) && v == std::max(a, b)))) {
            variant.remove_edge(u, v);
            auto swapped = oracle.with_swap(std::min(a, b), std::max(a, b), u, v);
            CHECK(swapped.has_value() == find_disjoint_packing(variant, k, r).has_value());
            if (swapped) CHECK(validate_packing(variant, *swapped, k));
          }
        }
      } else {
        // vertex modification: clone another vertex's neighborhood
        Graph variant = g;
        for (int w : g.neighbors(a)) variant.remove_edge(a, w);
        for (int w : g.neighbors(b))
          if (w != a) variant.add_edge(a, w);
        auto fast = oracle.with_modified_vertex(variant, a);
        CHECK(fast.has_value() == find_disjoint_packing(variant, k, r).has_value());
        if (fast) CHECK(validate_packing(variant, *fast, k));
      }
    }
  }
}
