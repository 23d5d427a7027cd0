#include "multipack/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace multipack {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::DisconnectedGraph: return "DisconnectedGraph";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::IdOutOfRange: return "IdOutOfRange";
    case Errc::TrivialGraph: return "TrivialGraph";
    case Errc::HorizonOutOfRange: return "HorizonOutOfRange";
    case Errc::InvalidPermutation: return "InvalidPermutation";
    case Errc::InvalidOrdering: return "InvalidOrdering";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::NotATree: return "NotATree";
    case Errc::NotPeripheral: return "NotPeripheral";
    case Errc::NotDominating: return "NotDominating";
    case Errc::ParamOutOfRange: return "ParamOutOfRange";
    case Errc::EdgeNotOnPath: return "EdgeNotOnPath";
    case Errc::ResourceLimit: return "ResourceLimit";
    case Errc::Infeasible: return "Infeasible";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n || v >= n) return false;
  return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edges) {
  if (n < 1) fail(Errc::ParamOutOfRange, "vertex count must be at least 1");
  Graph g;
  g.n = n;
  for (auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      fail(Errc::IdOutOfRange, "edge endpoint out of 0.." + std::to_string(n - 1));
    if (u == v) fail(Errc::SelfLoop, "self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    fail(Errc::DuplicateEdge, "duplicate edge in input");
  g.edges = std::move(edges);
  g.adj.assign(n, {});
  for (auto [u, v] : g.edges) {
    g.adj[u].push_back(v);
    g.adj[v].push_back(u);
  }
  for (auto& list : g.adj) std::sort(list.begin(), list.end());

  // connectivity
  std::vector<char> seen(n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  int reached = 1;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : g.adj[u])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        queue.push_back(w);
      }
  }
  if (reached != n) fail(Errc::DisconnectedGraph, "graph is not connected");
  return g;
}

DistanceMatrix distance_matrix(const Graph& g) {
  DistanceMatrix d;
  d.n = g.n;
  d.dist.assign(g.n, std::vector<int>(g.n, -1));
  d.ecc.assign(g.n, 0);
  for (int s = 0; s < g.n; ++s) {
    auto& row = d.dist[s];
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.adj[u])
        if (row[w] < 0) {
          row[w] = row[u] + 1;
          queue.push_back(w);
        }
    }
    d.ecc[s] = *std::max_element(row.begin(), row.end());
  }
  d.diameter = *std::max_element(d.ecc.begin(), d.ecc.end());
  d.radius = *std::min_element(d.ecc.begin(), d.ecc.end());
  return d;
}

std::vector<int> ball(const Graph& g, const DistanceMatrix& d, int v, int k) {
  if (v < 0 || v >= g.n) fail(Errc::IdOutOfRange, "ball centre out of range");
  if (k < 0) fail(Errc::ParamOutOfRange, "ball radius must be non-negative");
  std::vector<int> out;
  for (int u = 0; u < g.n; ++u)
    if (d.dist[v][u] <= k) out.push_back(u);
  return out;
}

std::vector<int> diametrical_path(const Graph& g, const DistanceMatrix& d) {
  int v0 = -1;
  for (int v = 0; v < g.n; ++v)
    if (d.ecc[v] == d.diameter) {
      v0 = v;
      break;
    }
  const auto& depth = d.dist[v0];
  // height[u] = deepest BFS layer reachable from u going strictly downward
  std::vector<int> height(g.n);
  std::vector<int> by_depth(g.n);
  for (int v = 0; v < g.n; ++v) by_depth[v] = v;
  std::sort(by_depth.begin(), by_depth.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int u : by_depth) {
    height[u] = depth[u];
    for (int w : g.adj[u])
      if (depth[w] == depth[u] + 1) height[u] = std::max(height[u], height[w]);
  }
  std::vector<int> path{v0};
  int cur = v0;
  for (int t = 0; t < d.diameter; ++t) {
    int next = -1;
    for (int w : g.adj[cur])
      if (depth[w] == t + 1 && height[w] == d.diameter) {
        next = w;
        break;  // adjacency is sorted, first hit is the lowest id
      }
    if (next < 0) fail(Errc::Internal, "diametrical path walk stuck");
    path.push_back(next);
    cur = next;
  }
  return path;
}

int Broadcast::cost() const {
  int total = 0;
  for (int p : power) total += p;
  return total;
}

std::vector<int> Broadcast::support() const {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(power.size()); ++v)
    if (power[v] >= 1) out.push_back(v);
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  auto next_tokens = [&](std::vector<long long>& toks) -> bool {
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ls(line);
      toks.clear();
      long long x;
      while (ls >> x) toks.push_back(x);
      if (!toks.empty()) return true;
    }
    return false;
  };
  std::vector<long long> toks;
  if (!next_tokens(toks) || toks.size() != 2)
    fail(Errc::ParamOutOfRange, "edge list must start with a 'n m' line");
  int n = static_cast<int>(toks[0]);
  long long m = toks[1];
  std::vector<std::pair<int, int>> edges;
  while (static_cast<long long>(edges.size()) < m) {
    if (!next_tokens(toks) || toks.size() != 2)
      fail(Errc::ParamOutOfRange, "expected an edge line 'u v'");
    edges.emplace_back(static_cast<int>(toks[0]), static_cast<int>(toks[1]));
  }
  return build_graph(n, std::move(edges));
}

void write_edge_list(const Graph& g, std::ostream& out) {
  out << g.n << ' ' << g.edges.size() << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

}  // namespace multipack
