#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "multipack/error.hpp"

namespace multipack {

// Simple connected undirected graph over dense vertex ids 0..n-1.
// Immutable after construction; all operations on it are pure.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
  std::vector<std::vector<int>> adj;       // sorted neighbour lists

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj[v].size()); }
  bool is_tree() const { return static_cast<int>(edges.size()) == n - 1; }
};

// Validates ids, rejects self-loops, duplicate edges and disconnected input.
Graph build_graph(int n, std::vector<std::pair<int, int>> edges);

struct DistanceMatrix {
  int n = 0;
  std::vector<std::vector<int>> dist;  // BFS hop counts
  std::vector<int> ecc;
  int diameter = 0;
  int radius = 0;

  int operator()(int u, int v) const { return dist[u][v]; }
};

DistanceMatrix distance_matrix(const Graph& g);

// N_k[v] = vertices within distance k of v, ascending ids.
std::vector<int> ball(const Graph& g, const DistanceMatrix& d, int v, int k);

// A shortest path v_0..v_d with d = diameter. Deterministic: v_0 is the
// lowest-id peripheral vertex; each step takes the lowest-id neighbour that
// still reaches depth d in the BFS dag from v_0.
std::vector<int> diametrical_path(const Graph& g, const DistanceMatrix& d);

// Broadcast assignment: one transmit power per vertex, power[v] <= ecc(v).
struct Broadcast {
  std::vector<int> power;

  int cost() const;
  std::vector<int> support() const;  // vertices with power >= 1
};

struct Multipacking {
  std::vector<int> members;  // sorted vertex ids
  int k = 0;                 // capacity horizon (diameter for a full multipacking)
};

// Edge-list text format: first line "n m", then m lines "u v".
// '#' starts a comment; blank lines ignored.
Graph read_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

}  // namespace multipack
