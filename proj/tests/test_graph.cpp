#include <doctest.h>

#include <sstream>

#include "multipack/generators.hpp"
#include "multipack/graph.hpp"

using namespace multipack;

TEST_CASE("build_graph validates input") {
  CHECK_NOTHROW(build_graph(2, {{0, 1}}));
  CHECK_THROWS_AS(build_graph(3, {{0, 1}}), Error);  // vertex 2 isolated
  CHECK_THROWS_AS(build_graph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(build_graph(2, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(build_graph(2, {{0, 2}}), Error);
  try {
    build_graph(3, {{0, 1}});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DisconnectedGraph);
  }
}

TEST_CASE("petersen degrees and distances") {
  auto g = petersen();
  for (int v = 0; v < 10; ++v) CHECK(g.degree(v) == 3);
  auto d = distance_matrix(g);
  CHECK(d.diameter == 2);
  CHECK(d.radius == 2);
}

TEST_CASE("distance matrix basics") {
  auto k2 = build_graph(2, {{0, 1}});
  auto d2 = distance_matrix(k2);
  CHECK(d2.dist[0][1] == 1);
  CHECK(d2.diameter == 1);

  auto p7 = path_graph(7);
  auto d7 = distance_matrix(p7);
  CHECK(d7.diameter == 6);
  CHECK(d7.radius == 3);

  // symmetry, zero diagonal, triangle inequality
  for (int u = 0; u < 7; ++u) {
    CHECK(d7.dist[u][u] == 0);
    for (int v = 0; v < 7; ++v) {
      CHECK(d7.dist[u][v] == d7.dist[v][u]);
      for (int w = 0; w < 7; ++w)
        CHECK(d7.dist[u][w] <= d7.dist[u][v] + d7.dist[v][w]);
    }
  }
}

TEST_CASE("balls") {
  auto g = petersen();
  auto d = distance_matrix(g);
  for (int v = 0; v < 10; ++v) {
    CHECK(ball(g, d, v, 0) == std::vector<int>{v});
    CHECK(ball(g, d, v, 1).size() == 4);
    CHECK(ball(g, d, v, 2).size() == 10);
  }
  CHECK_THROWS_AS(ball(g, d, 10, 1), Error);

  // |N_k[v]| non-decreasing in k, n once k reaches ecc
  auto t = random_tree(11, 3);
  auto dt = distance_matrix(t);
  for (int v = 0; v < t.n; ++v) {
    std::size_t prev = 0;
    for (int k = 0; k <= dt.ecc[v]; ++k) {
      auto b = ball(t, dt, v, k);
      CHECK(b.size() >= prev);
      prev = b.size();
    }
    CHECK(prev == static_cast<std::size_t>(t.n));
  }
}

TEST_CASE("diametrical path is canonical and shortest") {
  auto p5 = path_graph(5);
  auto d5 = distance_matrix(p5);
  CHECK(diametrical_path(p5, d5) == std::vector<int>{0, 1, 2, 3, 4});

  auto c6 = cycle_graph(6);
  auto d6 = distance_matrix(c6);
  auto path = diametrical_path(c6, d6);
  CHECK(path == std::vector<int>{0, 1, 2, 3});
  CHECK(path.size() == static_cast<std::size_t>(d6.diameter) + 1);

  auto gk = hartnell_mynhardt_gk(1);
  auto dk = distance_matrix(gk.graph);
  CHECK(dk.diameter == 8);
  CHECK(diametrical_path(gk.graph, dk).size() == 9);

  // endpoints peripheral on a few random trees
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    auto t = random_tree(10, seed);
    auto dt = distance_matrix(t);
    auto p = diametrical_path(t, dt);
    CHECK(dt.ecc[p.front()] == dt.diameter);
    CHECK(dt.ecc[p.back()] == dt.diameter);
    for (std::size_t i = 0; i + 1 < p.size(); ++i) CHECK(t.has_edge(p[i], p[i + 1]));
  }
}

TEST_CASE("edge list round trip") {
  std::istringstream in("4 3\n# a comment line\n0 1\n1 2  # trailing\n2 3\n");
  auto g = read_edge_list(in);
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 3);
  std::ostringstream out;
  write_edge_list(g, out);
  std::istringstream in2(out.str());
  auto g2 = read_edge_list(in2);
  CHECK(g2.edges == g.edges);
}

TEST_CASE("broadcast cost and support") {
  Broadcast b;
  b.power = {0, 2, 0, 1};
  CHECK(b.cost() == 3);
  CHECK(b.support() == std::vector<int>{1, 3});
}
