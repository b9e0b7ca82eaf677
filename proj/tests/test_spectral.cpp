#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cmath>
#include <random>

#include "spex/spectral.hpp"

using namespace spex;

namespace {

// dense eigensolver oracle, independent of the power-iteration path
double dense_rho(const Graph& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(adjacency_matrix(g),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Graph random_connected(int n, std::mt19937_64& rng, double p) {
  while (true) {
    Graph g(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (std::uniform_real_distribution<double>(0, 1)(rng) < p) g.add_edge(a, b);
    if (g.is_connected()) return g;
  }
}

}  // namespace

TEST_CASE("spectral radius on closed-form graphs") {
  auto k5 = spectral_radius(Graph::complete(5));
  CHECK(k5.converged);
  CHECK(k5.rho == doctest::Approx(4.0).epsilon(1e-12));
  CHECK(k5.residual <= 1e-10);

  auto k33 = spectral_radius(complete_multipartite({3, 3}));
  CHECK(k33.rho == doctest::Approx(3.0).epsilon(1e-12));

  Graph g = join(Graph::complete(1), complete_multipartite({3, 2}));
  auto res = spectral_radius(g);
  CHECK(std::abs(res.rho - dense_rho(g)) <= 1e-9);
  CHECK(res.rho == doctest::Approx(3.7664).epsilon(1e-3));  // root of x^3-11x-12
  CHECK(std::abs(res.rho - quotient_rho(2, 2, std::vector<int>{3, 2})) <= 1e-9);

  CHECK_THROWS_AS(spectral_radius(Graph(0)), std::invalid_argument);
  CHECK_THROWS_AS(spectral_radius(Graph(3), 0.0), std::invalid_argument);
}

TEST_CASE("result vector contract") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_connected(3 + int(rng() % 20), rng, 0.4);
    auto res = spectral_radius(g);
    CHECK(res.converged);
    CHECK(res.residual <= 1e-10);
    CHECK(res.vector.maxCoeff() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(res.vector.minCoeff() > 0.0);
    // residual really is the eigen-equation defect of the returned pair
    Eigen::VectorXd ax;
    adjacency_multiply(g, res.vector, ax);
    CHECK((ax - res.rho * res.vector).lpNorm<Eigen::Infinity>() ==
          doctest::Approx(res.residual).epsilon(1e-9));
  }
}

TEST_CASE("perron vector structure") {
  auto kn = perron_vector(Graph::complete(7));
  for (int v = 0; v < 7; ++v) CHECK(kn.vector[v] == doctest::Approx(1.0).epsilon(1e-12));

  Graph star = complete_multipartite({1, 3});
  auto s = perron_vector(star);
  CHECK(s.rho == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
  CHECK(s.vector[0] == doctest::Approx(1.0));
  for (int leaf = 1; leaf < 4; ++leaf)
    CHECK(s.vector[leaf] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-10));

  CHECK_THROWS_AS(perron_vector(disjoint_copies(Graph::complete(3), 2)),
                  std::invalid_argument);

  // join-vertex entry 1, part entries (rho+1)/(rho+4) on K_1 v T_{8,2}
  Graph g = clique_join_turan(9, 2, 2);
  auto res = perron_vector(g);
  double want = (res.rho + 1.0) / (res.rho + 4.0);
  CHECK(res.vector[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (int v = 1; v < 9; ++v) CHECK(res.vector[v] == doctest::Approx(want).epsilon(1e-9));
}

TEST_CASE("quotient matrix spectral radius") {
  CHECK(quotient_rho(1, 3, std::vector<int>{2, 2, 2}) == doctest::Approx(4.0).epsilon(1e-13));
  CHECK(quotient_rho(2, 1, std::vector<int>{3}) ==
        doctest::Approx(std::sqrt(3.0)).epsilon(1e-13));
  Graph g = join(Graph::complete(1), complete_multipartite({4, 4}));
  CHECK(quotient_rho(2, 2, std::vector<int>{4, 4}) ==
        doctest::Approx(dense_rho(g)).epsilon(1e-12));
  CHECK_THROWS_AS(quotient_rho(2, 2, std::vector<int>{4, 0}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_rho(0, 2, std::vector<int>{4, 4}), std::invalid_argument);
  CHECK_THROWS_AS(quotient_rho(2, 2, std::vector<int>{4}), std::invalid_argument);
}

TEST_CASE("power iteration agrees with the quotient closed form") {
  for (int k = 1; k <= 3; ++k)
    for (int r = 1; r <= 3; ++r)
      for (int size : {2, 5, 8}) {
        std::vector<int> parts(r, size);
        Graph g = join(Graph::complete(k - 1), complete_multipartite(parts));
        if (g.vertex_count() < 2) continue;
        auto res = spectral_radius(g);
        CHECK(std::abs(res.rho - quotient_rho(k, r, parts)) <= 1e-8);
      }
  // unbalanced part vectors across the full parameter box
  std::mt19937_64 rng(271828);
  for (int trial = 0; trial < 60; ++trial) {
    int k = 1 + static_cast<int>(rng() % 4);
    int r = 1 + static_cast<int>(rng() % 4);
    std::vector<int> parts(r);
    for (int& p : parts) p = 1 + static_cast<int>(rng() % 20);
    Graph g = join(Graph::complete(k - 1), complete_multipartite(parts));
    if (g.vertex_count() < 2) continue;
    auto res = spectral_radius(g);
    CHECK(std::abs(res.rho - quotient_rho(k, r, parts)) <= 1e-8);
  }
}

TEST_CASE("lower bound formula") {
  CHECK(rho_lower_bound(100, 2, 2) == doctest::Approx(50.975).epsilon(1e-12));
  CHECK(rho_lower_bound(100, 1, 2) == doctest::Approx(49.99).epsilon(1e-12));
  CHECK_THROWS_AS(rho_lower_bound(0, 2, 2), std::invalid_argument);

  // the bound sits strictly below the family's actual spectral radius
  for (int r = 2; r <= 4; ++r)
    for (int k = 1; k <= 4; ++k)
      for (int n = k * (r + 1); n <= 50; n += 3)
        CHECK(quotient_rho(k, r, turan_parts(n - k + 1, r)) >
              rho_lower_bound(n, k, r));
}

TEST_CASE("adding an edge strictly increases rho") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_connected(4 + int(rng() % 47), rng, 0.3);
    double before = spectral_radius(g).rho;
    std::vector<std::pair<int, int>> missing;
    for (int a = 0; a < g.vertex_count(); ++a)
      for (int b = a + 1; b < g.vertex_count(); ++b)
        if (!g.has_edge(a, b)) missing.emplace_back(a, b);
    if (missing.empty()) continue;
    auto [a, b] = missing[rng() % missing.size()];
    g.add_edge(a, b);
    CHECK(spectral_radius(g).rho - before > 0.0);
  }
}

TEST_CASE("bipartite graphs converge under the shift") {
  for (int m = 1; m <= 30; ++m) {
    auto res = spectral_radius(complete_multipartite({m, m}));
    CHECK(res.converged);
    CHECK(res.rho == doctest::Approx(m).epsilon(1e-10));
  }
}

TEST_CASE("eigenvector profile of the extremal family") {
  {
    Graph g = join(Graph::complete(1), complete_multipartite({4, 4}));
    auto rep = eigenvector_profile_check(g, 2, std::vector<int>{4, 4},
                                         family_roles(9, 2, 2), 1e-8);
    CHECK(rep.pass);
    CHECK(rep.part_profile_deviation <= 1e-8);
    CHECK(rep.dominating_margin >= -1e-8);
  }
  {
    // two dominating vertices, both pinned at the maximum
    Graph g = clique_join_turan(8, 3, 2);
    auto rep = eigenvector_profile_check(g, 3, std::vector<int>{3, 3},
                                         family_roles(8, 3, 2), 1e-8);
    CHECK(rep.pass);
    CHECK(rep.dominating_spread <= 1e-8);
  }
  {
    // r = 2: the entry lower bound degenerates to 0 and is vacuous
    Graph g = clique_join_turan(10, 1, 2);
    auto rep = eigenvector_profile_check(g, 1, turan_parts(10, 2),
                                         family_roles(10, 1, 2), 1e-8);
    CHECK(rep.entry_lower_bound == 0.0);
    CHECK(rep.pass);
  }
  {
    // r = 3: every entry at least 1 - 1/(r-1) = 1/2
    Graph g = clique_join_turan(14, 2, 3);
    auto rep = eigenvector_profile_check(g, 2, turan_parts(13, 3),
                                         family_roles(14, 2, 3), 1e-8);
    CHECK(rep.pass);
    CHECK(rep.min_entry >= 0.5 - 1e-8);
  }
  // inconsistent role map is rejected
  Graph g = clique_join_turan(9, 2, 2);
  std::vector<int> roles = family_roles(9, 2, 2);
  std::swap(roles[0], roles[1]);
  CHECK_THROWS_AS(
      eigenvector_profile_check(g, 2, std::vector<int>{4, 4}, roles, 1e-8),
      std::invalid_argument);
}
