#pragma once

#include <string>
#include <utility>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

// A path hanging off the diametrical path: verts run outward from the attach
// vertex (which is path[pos] and not stored here).
struct ShadowBranch {
  int pos = -1;
  std::vector<int> verts;
  int age = 0;  // relocation stamp; fresher branches win equal-span ties
  std::vector<std::pair<int, int>> pending;  // split edges of shifts not yet merged

  int length() const { return static_cast<int>(verts.size()); }
};

struct ShadowTree {
  std::vector<int> path;                          // canonical diametrical path
  std::vector<ShadowBranch> branches;             // one per branch vertex, nested ones removed
  std::vector<ShadowBranch> pruned;               // removed nested branches
  std::vector<std::pair<int, int>> triangles;     // clamped span [lo,hi] per kept branch
  std::vector<std::pair<int, int>> free_edges;    // path edges (i,i+1) in no triangle
};

// Keeps, per path vertex, the longest hanging path (ties to the lowest tip
// id), then removes branches whose path span nests inside another's.
ShadowTree shadow_tree(const Graph& g);

struct TreeMpStep {
  std::string op;  // shadow / leading_swap / nested_delete / take3 / take2_swap / shift / shrink / final / end_swap
  std::vector<int> multipacking;
  std::vector<int> path;
  std::vector<std::pair<int, int>> splits;
  int tree_size = 0;  // |V(T)| of the working tree after the step
};

struct TreeMpRun {
  Multipacking multipacking;
  std::vector<std::pair<int, int>> split_edges;  // in insertion order
  std::vector<TreeMpStep> trace;
  int iterations = 0;
};

// Tail-trimming scan over the shadow tree: repeatedly takes the path end into
// the multipacking three steps at a time, swapping and shifting the last
// branch as the trailing free-edge count dictates, then repositions picks
// across the recorded split edges. The result is a maximum multipacking of
// the original tree.
TreeMpRun find_tree_multipacking_run(const Graph& g);
Multipacking find_tree_multipacking(const Graph& g);

// Every component of the tree minus the given path edges must have positive
// even diameter realized by its piece of the path.
bool verify_split_set(const Graph& g, const std::vector<int>& path,
                      const std::vector<std::pair<int, int>>& edges);

}  // namespace multipack
