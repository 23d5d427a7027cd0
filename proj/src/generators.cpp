#include "multipack/generators.hpp"

#include <algorithm>
#include <map>
#include <random>

namespace multipack {

namespace {

// Builds a labeled graph from an explicit vertex order and an edge table over
// symbolic names; the two tables are the single reviewable source for every
// transcribed instance below.
LabeledGraph from_named_edges(const std::vector<const char*>& vertices,
                              const std::vector<std::pair<const char*, const char*>>& named) {
  LabeledGraph out;
  std::map<std::string, int> ids;
  for (const char* name : vertices) {
    ids.emplace(name, static_cast<int>(out.labels.size()));
    out.labels.emplace_back(name);
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : named) edges.emplace_back(ids.at(a), ids.at(b));
  out.graph = build_graph(static_cast<int>(out.labels.size()), std::move(edges));
  return out;
}

}  // namespace

int LabeledGraph::id(const std::string& label) const {
  for (int v = 0; v < static_cast<int>(labels.size()); ++v)
    if (labels[v] == label) return v;
  fail(Errc::IdOutOfRange, "unknown vertex label '" + label + "'");
}

Graph path_graph(int n) {
  if (n < 2) fail(Errc::ParamOutOfRange, "path needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) fail(Errc::ParamOutOfRange, "cycle needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return build_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
  if (n < 2) fail(Errc::ParamOutOfRange, "complete graph needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return build_graph(n, std::move(edges));
}

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return build_graph(10, std::move(edges));
}

Graph trampoline(int n) {
  if (n < 3) fail(Errc::ParamOutOfRange, "trampoline needs n >= 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);  // clique
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(n + i, i);                  // w_i ~ u_i
    edges.emplace_back(n + i, (i + n - 1) % n);    // w_i ~ u_{i-1}
  }
  return build_graph(2 * n, std::move(edges));
}

LabeledGraph hartnell_mynhardt_gk(int k) {
  if (k < 1) fail(Errc::ParamOutOfRange, "chain parameter k must be >= 1");
  LabeledGraph out;
  const char* names[6] = {"a", "r", "s", "b", "c", "u"};
  int blocks = 3 * k;
  for (int i = 1; i <= blocks; ++i)
    for (const char* base : names) out.labels.push_back(base + std::to_string(i));
  auto id = [&](int block, int off) { return (block - 1) * 6 + off; };
  // offsets within a block: a=0 r=1 s=2 b=3 c=4 u=5
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= blocks; ++i)
    for (int part : {4, 5})       // c_i, u_i
      for (int y : {0, 1, 2, 3})  // a_i, r_i, s_i, b_i
        edges.emplace_back(id(i, part), id(i, y));
  for (int i = 1; i < blocks; ++i) edges.emplace_back(id(i, 3), id(i + 1, 0));
  out.graph = build_graph(6 * blocks, std::move(edges));
  return out;
}

LabeledGraph teshima_graph() {
  // Two 4-cycles (x- and y-) hung between two mirrored pendant paths e-m-h;
  // transcribed segment by segment.
  static const std::vector<const char*> vertices = {
      "e1", "e2", "m1", "m2", "h1", "h2",
      "x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4"};
  static const std::vector<std::pair<const char*, const char*>> table = {
      {"e1", "m1"}, {"m1", "h1"}, {"h1", "x3"},  // left pendant path into the x-cycle
      {"e2", "m2"}, {"m2", "h2"}, {"h2", "x4"},  // right pendant path into the x-cycle
      {"h1", "y1"},
      {"h2", "y2"},
      {"x1", "x2"}, {"x2", "x3"}, {"x3", "x4"}, {"x4", "x1"},  // x-cycle
      {"y1", "y2"}, {"y2", "y3"}, {"y3", "y4"}, {"y4", "y1"},  // y-cycle
      {"e1", "x1"},
      {"e2", "x2"},
      {"e1", "y3"},
      {"e2", "y4"},
  };
  return from_named_edges(vertices, table);
}

LabeledGraph example_tree10() {
  static const std::vector<const char*> vertices = {
      "v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9", "v10"};
  static const std::vector<std::pair<const char*, const char*>> table = {
      {"v1", "v4"}, {"v4", "v7"}, {"v7", "v9"}, {"v9", "v10"}, {"v10", "v8"},
      {"v8", "v6"}, {"v6", "v3"}, {"v2", "v5"}, {"v5", "v7"},
  };
  return from_named_edges(vertices, table);
}

LabeledGraph example_tree24() {
  static const std::vector<const char*> vertices = {
      "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l",
      "m", "n", "o", "p", "q", "r", "s", "t", "u", "v", "w", "x"};
  static const std::vector<std::pair<const char*, const char*>> table = {
      // spine a..m
      {"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "g"},
      {"g", "h"}, {"h", "i"}, {"i", "j"}, {"j", "k"}, {"k", "l"}, {"l", "m"},
      // hanging paths
      {"b", "n"}, {"b", "o"}, {"d", "p"}, {"e", "q"}, {"g", "r"}, {"g", "s"},
      {"q", "t"}, {"q", "u"}, {"r", "v"}, {"s", "w"}, {"s", "x"},
  };
  return from_named_edges(vertices, table);
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 2) fail(Errc::ParamOutOfRange, "random tree needs n >= 2");
  std::vector<std::pair<int, int>> edges;
  if (n == 2) {
    edges.emplace_back(0, 1);
    return build_graph(2, std::move(edges));
  }
  // Pruefer decoding; draws use plain modulo so the edge set is pinned by the
  // standard-defined mt19937_64 stream alone.
  std::mt19937_64 rng(seed);
  std::vector<int> pruefer(n - 2);
  for (int& x : pruefer) x = static_cast<int>(rng() % n);
  std::vector<int> degree(n, 1);
  for (int x : pruefer) ++degree[x];
  int ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : pruefer) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;  // reuse the freed vertex while it is below the scan pointer
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n - 1);
  return build_graph(n, std::move(edges));
}

}  // namespace multipack
