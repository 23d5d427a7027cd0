#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

Graph path_graph(int n);      // n >= 2
Graph cycle_graph(int n);     // n >= 3
Graph complete_graph(int n);  // n >= 2
Graph petersen();

// Split graph on 2n vertices: clique u_0..u_{n-1} (ids 0..n-1) plus an
// independent set w_0..w_{n-1} (ids n..2n-1) with w_i ~ u_i and w_i ~ u_{i-1 mod n}.
Graph trampoline(int n);  // n >= 3

// Graph with per-vertex string labels; ids stay dense 0..n-1.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> labels;  // id -> label

  int id(const std::string& label) const;
};

// Chain of 3k copies of K_{2,4} (parts {c_i,u_i} / {a_i,r_i,s_i,b_i}),
// consecutive copies joined by the edge b_i a_{i+1}.
LabeledGraph hartnell_mynhardt_gk(int k);  // k >= 1

// The 14-vertex graph with broadcast number 4 and multipacking number 2
// (two 4-cycles bridged through two pendant paths).
LabeledGraph teshima_graph();

// Worked-example trees: a 10-vertex caterpillar used by the primal-dual
// goldens, and the 24-vertex tree used by the shadow-tree goldens.
LabeledGraph example_tree10();
LabeledGraph example_tree24();

// Uniform random labeled tree from a seeded Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);  // n >= 2

}  // namespace multipack
