#include <doctest.h>

#include <numeric>
#include <random>

#include "multipack/farber.hpp"
#include "multipack/generators.hpp"
#include "multipack/solvers.hpp"
#include "oracles.hpp"

using namespace multipack;

namespace {

std::vector<int> identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Random connected interval graph; interval graphs always admit a strong
// elimination ordering.
Graph random_interval_graph(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  while (true) {
    std::vector<std::pair<int, int>> iv(n);
    for (auto& [a, b] : iv) {
      a = static_cast<int>(rng() % (3 * n));
      b = a + 1 + static_cast<int>(rng() % n);
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (iv[i].first <= iv[j].second && iv[j].first <= iv[i].second)
          edges.emplace_back(i, j);
    try {
      return build_graph(n, std::move(edges));
    } catch (const Error&) {
      continue;  // disconnected draw, retry
    }
  }
}

}  // namespace

TEST_CASE("ordering construction validates") {
  auto t10 = example_tree10();
  CHECK_NOTHROW(make_ordering(t10.graph, identity(10)));
  auto c6 = cycle_graph(6);
  CHECK_THROWS_AS(make_ordering(c6, identity(6)), Error);
}

TEST_CASE("weighted domination run reproduces the worked example") {
  auto t10 = example_tree10();
  auto ordering = make_ordering(t10.graph, identity(10));
  auto run = farber_domination(t10.graph, ordering, std::vector<long long>(10, 1));

  CHECK(run.packing == std::vector<long long>{1, 1, 1, 0, 0, 0, 0, 0, 1, 0});
  CHECK(run.dominating == std::vector<int>{3, 4, 5, 9});
  CHECK(run.packing_total == 4);
  CHECK(run.dominating_weight == 4);

  // frozen slack tables after each dual step
  const std::vector<std::vector<long long>> slack_gold = {
      {0, 1, 1, 0, 1, 1, 1, 1, 1, 1},  // after y(v1)
      {0, 0, 1, 0, 0, 1, 1, 1, 1, 1},  // after y(v2)
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // after y(v3)
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // v4 kept
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // v5 kept
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // v6 kept
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // v7 kept
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 1},  // v8 kept
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},  // after y(v9)
      {0, 0, 0, 0, 0, 0, 0, 1, 0, 0},  // v10 kept
  };
  REQUIRE(run.trace.size() == 20);
  for (int t = 0; t < 10; ++t) {
    CHECK(run.trace[t].stage == "dual");
    CHECK(run.trace[t].vertex == t);
    CHECK(run.trace[t].slack == slack_gold[t]);
  }
  // primal stage: v10, v6, v5, v4 selected in the backward scan
  std::vector<int> selected;
  for (int t = 10; t < 20; ++t)
    if (run.trace[t].selected) selected.push_back(run.trace[t].vertex);
  CHECK(selected == std::vector<int>{9, 5, 4, 3});
}

TEST_CASE("domination run input validation") {
  auto k2 = build_graph(2, {{0, 1}});
  auto o = make_ordering(k2, identity(2));
  CHECK_THROWS_AS(farber_domination(k2, o, {1}), Error);
  CHECK_THROWS_AS(farber_domination(k2, o, {1, 0}), Error);
  auto run = farber_domination(k2, o, {1, 1});
  CHECK(run.packing == std::vector<long long>{1, 0});
  CHECK(run.dominating.size() == 1);
}

TEST_CASE("unit-weight runs match the exact solvers on strongly chordal graphs") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = random_interval_graph(3 + static_cast<int>(rng() % 5), rng());
    auto report = strongly_chordal(g);
    REQUIRE(report.verdict == ChordalityVerdict::StronglyChordal);
    auto run = farber_domination(g, make_ordering(g, report.ordering),
                                 std::vector<long long>(g.n, 1));
    CHECK(static_cast<int>(run.dominating.size()) == oracle::domination_number(g));
    int support = 0;
    for (auto y : run.packing)
      if (y > 0) ++support;
    CHECK(support == oracle::two_packing_number(g));
  }
}

TEST_CASE("weighted runs are optimal against weighted brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 5);
    auto g = trial % 2 ? random_interval_graph(n, rng()) : random_tree(std::max(n, 4), rng());
    auto report = strongly_chordal(g);
    REQUIRE(report.verdict == ChordalityVerdict::StronglyChordal);
    std::vector<long long> weights(g.n);
    for (auto& w : weights) w = 1 + static_cast<long long>(rng() % 5);
    auto run = farber_domination(g, make_ordering(g, report.ordering), weights);

    // brute-force minimum weighted dominating set
    auto d = distance_matrix(g);
    long long best = -1;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
      bool dominates = true;
      for (int v = 0; v < g.n && dominates; ++v) {
        bool hit = false;
        for (int u = 0; u < g.n && !hit; ++u) hit = (mask >> u & 1) && d.dist[u][v] <= 1;
        dominates = hit;
      }
      if (!dominates) continue;
      long long total = 0;
      for (int u = 0; u < g.n; ++u)
        if (mask >> u & 1) total += weights[u];
      if (best < 0 || total < best) best = total;
    }
    CHECK(run.dominating_weight == best);
    CHECK(run.packing_total == best);

    // dual feasibility of the packing
    for (int v = 0; v < g.n; ++v) {
      long long sum = run.packing[v];
      for (int w : g.adj[v]) sum += run.packing[w];
      CHECK(sum <= weights[v]);
    }
  }
}

TEST_CASE("tree ball matrix reproduces the 17-column worked layout") {
  auto t10 = example_tree10();
  auto a = tree_ball_matrix(t10.graph);
  CHECK(a.m.rows == 10);
  CHECK(a.m.cols == 17);
  CHECK(a.row_index == identity(10));  // depth-descending happens to be natural here

  const std::vector<ColumnKey> keys = {
      {0, 1}, {1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1},
      {6, 2}, {9, 1}, {7, 2}, {8, 2}, {9, 2}, {8, 3}, {9, 3}, {9, 4}};
  CHECK(a.col_index == keys);

  const char* bits[10] = {
      "10010000010000101", "01001000010000101", "00100100000100011",
      "10010010010010111", "01001010010010111", "00100101000101111",
      "00011010110011111", "00000101001111111", "00000010111111111",
      "00000001111111111"};
  for (int r = 0; r < 10; ++r)
    for (int c = 0; c < 17; ++c)
      CHECK(static_cast<int>(a.m.at(r, c)) == bits[r][c] - '0');
}

TEST_CASE("tree ball matrix smaller cases") {
  auto star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  auto a = tree_ball_matrix(star);
  CHECK(a.m.rows == 4);
  CHECK(a.m.cols == 4);  // three leaf balls plus the centre ball
  int all_ones = 0;
  for (int c = 0; c < 4; ++c) {
    int sum = 0;
    for (int r = 0; r < 4; ++r) sum += a.m.at(r, c);
    if (sum == 4) ++all_ones;
  }
  CHECK(all_ones == 1);  // only the centre ball covers everything

  CHECK_THROWS_AS(tree_ball_matrix(cycle_graph(4)), Error);

  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto t = random_tree(4 + static_cast<int>(seed), seed);
    auto m = tree_ball_matrix(t);
    CHECK_FALSE(gamma_free_check(m.m).has_value());
    // rows are sorted by decreasing depth
    for (int c = 0; c + 1 < m.m.cols; ++c)
      CHECK(m.col_cost[c] == m.col_index[c].radius);
  }
}

TEST_CASE("ball-cover run reproduces the worked example") {
  auto t10 = example_tree10();
  auto run = farber_broadcast(t10.graph);
  CHECK(run.multipacking.members == std::vector<int>{0, 1, 2});
  CHECK(run.broadcast.cost() == 3);
  CHECK(run.broadcast.power[6] == 2);
  CHECK(run.broadcast.power[5] == 1);
  for (int v : {0, 1, 2, 3, 4, 7, 8, 9}) CHECK(run.broadcast.power[v] == 0);

  // frozen slack tables after the first three dual steps
  const std::vector<std::vector<long long>> gold = {
      {0, 1, 1, 0, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3},
      {0, 0, 1, 0, 0, 1, 1, 1, 1, 0, 1, 2, 2, 2, 1, 3, 2},
      {0, 0, 0, 0, 0, 0, 1, 1, 1, 0, 1, 1, 2, 2, 1, 2, 1},
  };
  REQUIRE(run.trace.size() == 10 + 17);
  for (int t = 0; t < 3; ++t) {
    CHECK(run.trace[t].stage == "dual");
    CHECK(run.trace[t].value == 1);
    CHECK(run.trace[t].slack == gold[t]);
  }
  for (int t = 3; t < 10; ++t) CHECK(run.trace[t].value == 0);

  // primal stage scans columns right to left; only (7,2) and (6,1) selected
  std::vector<ColumnKey> chosen;
  for (std::size_t t = 10; t < run.trace.size(); ++t)
    if (run.trace[t].selected) chosen.push_back(run.trace[t].column);
  CHECK(chosen == std::vector<ColumnKey>{{6, 2}, {5, 1}});
}

TEST_CASE("ball-cover run equals the exact solvers on random trees") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 25; ++trial) {
    auto t = random_tree(4 + static_cast<int>(rng() % 9), rng());
    auto run = farber_broadcast(t);
    CHECK(run.broadcast.cost() == broadcast_number(t).value);
    CHECK(static_cast<int>(run.multipacking.members.size()) ==
          multipacking_number(t).value);
    CHECK(verify_dominating_broadcast(t, run.broadcast).dominating);
    CHECK(verify_multipacking(t, run.multipacking.members, run.multipacking.k).valid);
  }
  CHECK_THROWS_AS(farber_broadcast(cycle_graph(5)), Error);
}

TEST_CASE("dual feasibility and complementary slackness hold after each run") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 15; ++trial) {
    auto t = random_tree(4 + static_cast<int>(rng() % 9), rng());
    auto a = tree_ball_matrix(t);
    auto run = farber_broadcast(t);
    const auto& slack = run.trace[t.n - 1].slack;  // after the last dual step

    // every slack non-negative, every vertex touches a tight ball
    for (long long h : slack) CHECK(h >= 0);
    for (int r = 0; r < a.m.rows; ++r) {
      bool tight = false;
      for (int c = 0; c < a.m.cols && !tight; ++c)
        tight = a.m.at(r, c) && slack[c] == 0;
      CHECK(tight);
    }
    // selected balls are tight
    for (std::size_t s = t.n; s < run.trace.size(); ++s)
      if (run.trace[s].selected) {
        auto key = run.trace[s].column;
        for (int c = 0; c < a.m.cols; ++c)
          if (a.col_index[c] == key) CHECK(slack[c] == 0);
      }
    // dual-support vertices hear exactly one selected ball
    auto d = distance_matrix(t);
    for (int m : run.multipacking.members) {
      int heard = 0;
      for (int v = 0; v < t.n; ++v)
        if (run.broadcast.power[v] >= 1 && d.dist[v][m] <= run.broadcast.power[v]) ++heard;
      CHECK(heard == 1);
    }
  }
}

TEST_CASE("worked tree parameters line up across routes") {
  auto t10 = example_tree10();
  CHECK(broadcast_number(t10.graph).value == 3);
  CHECK(multipacking_number(t10.graph).value == 3);
  auto t24 = example_tree24();
  CHECK(broadcast_number(t24.graph).value == 6);
  CHECK(multipacking_number(t24.graph).value == 6);
}

TEST_CASE("two-vertex tree run") {
  auto k2 = build_graph(2, {{0, 1}});
  auto run = farber_broadcast(k2);
  CHECK(run.multipacking.members == std::vector<int>{0});
  CHECK(run.broadcast.cost() == 1);
}
