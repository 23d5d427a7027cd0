#include <doctest.h>

#include "multipack/generators.hpp"

using namespace multipack;

TEST_CASE("standard families") {
  CHECK(path_graph(2).edges.size() == 1);
  CHECK(cycle_graph(6).edges.size() == 6);
  CHECK(complete_graph(4).edges.size() == 6);
  CHECK_THROWS_AS(path_graph(1), Error);
  CHECK_THROWS_AS(cycle_graph(2), Error);
  CHECK_THROWS_AS(trampoline(2), Error);
}

TEST_CASE("petersen girth") {
  auto g = petersen();
  // shortest cycle through each edge has length 5
  auto d = distance_matrix(g);
  int girth = 1 << 20;
  for (auto [u, v] : g.edges) {
    // remove edge u-v mentally: BFS distance without it
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int x = queue[h];
      for (int w : g.adj[x]) {
        if ((x == u && w == v) || (x == v && w == u)) continue;
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          queue.push_back(w);
        }
      }
    }
    if (dist[v] >= 0) girth = std::min(girth, dist[v] + 1);
  }
  CHECK(girth == 5);
  CHECK(d.diameter == 2);
}

TEST_CASE("trampoline structure") {
  auto g = trampoline(3);
  CHECK(g.n == 6);
  for (int i = 0; i < 3; ++i) CHECK(g.degree(3 + i) == 2);  // independent side
  auto g5 = trampoline(5);
  CHECK(g5.n == 10);
  for (int i = 0; i < 5; ++i) {
    CHECK(g5.degree(i) == 6);      // clique side: 4 clique + 2 pendant
    CHECK(g5.degree(5 + i) == 2);  // w_i hits u_i and u_{i-1}
    CHECK(g5.has_edge(5 + i, i));
    CHECK(g5.has_edge(5 + i, (i + 4) % 5));
  }
}

TEST_CASE("k24 chain structure") {
  auto lg = hartnell_mynhardt_gk(1);
  CHECK(lg.graph.n == 18);
  for (int i = 1; i <= 3; ++i) {
    CHECK(lg.graph.degree(lg.id("c" + std::to_string(i))) == 4);
    CHECK(lg.graph.degree(lg.id("u" + std::to_string(i))) == 4);
  }
  CHECK(lg.graph.has_edge(lg.id("b1"), lg.id("a2")));
  CHECK(lg.graph.has_edge(lg.id("b2"), lg.id("a3")));
  CHECK_FALSE(lg.graph.has_edge(lg.id("c1"), lg.id("u1")));
  CHECK(distance_matrix(lg.graph).diameter == 8);

  auto lg2 = hartnell_mynhardt_gk(2);
  CHECK(lg2.graph.n == 36);
}

TEST_CASE("transcribed instances") {
  auto t = teshima_graph();
  CHECK(t.graph.n == 14);
  CHECK(t.graph.edges.size() == 20);

  auto t10 = example_tree10();
  CHECK(t10.graph.n == 10);
  CHECK(t10.graph.is_tree());

  auto t24 = example_tree24();
  CHECK(t24.graph.n == 24);
  CHECK(t24.graph.is_tree());
  CHECK(distance_matrix(t24.graph).diameter == 12);
}

TEST_CASE("random trees are deterministic per seed") {
  auto a = random_tree(9, 7);
  auto b = random_tree(9, 7);
  CHECK(a.edges == b.edges);
  auto c = random_tree(9, 8);
  CHECK(a.edges != c.edges);  // overwhelmingly likely and pinned by the rng

  CHECK(random_tree(2, 123).edges == std::vector<std::pair<int, int>>{{0, 1}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto t = random_tree(8, seed);
    CHECK(t.n == 8);
    CHECK(t.edges.size() == 7);  // connectivity already enforced at build
  }
}
