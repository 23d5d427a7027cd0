#pragma once

#include <string>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/matrix.hpp"

namespace multipack {

struct EliminationOrdering {
  std::vector<int> order;     // order[t] = vertex at position t
  std::vector<int> position;  // inverse permutation
};

// Validates that `order` is a strong elimination ordering of g.
EliminationOrdering make_ordering(const Graph& g, std::vector<int> order);

// One scan step of a primal-dual run, for trace output and goldens.
struct FarberStep {
  std::string stage;             // "dual" or "primal"
  int vertex = -1;               // dual steps: scanned vertex
  ColumnKey column;              // primal steps: scanned ball
  long long value = 0;           // dual steps: y assigned
  bool selected = false;         // primal steps: x set to 1
  std::vector<long long> slack;  // h after the step, in scan order
};

struct DominationRun {
  std::vector<long long> packing;  // y per vertex (weighted 2-packing)
  std::vector<int> dominating;     // selected vertices, ascending
  long long packing_total = 0;
  long long dominating_weight = 0;
  std::vector<FarberStep> trace;
};

// Two-stage greedy over a strong elimination ordering: Stage 1 fixes a dual
// solution scanning forward, Stage 2 picks tight closed neighbourhoods
// scanning backward. Complementary slackness makes both outputs optimal.
DominationRun farber_domination(const Graph& g, const EliminationOrdering& ordering,
                                const std::vector<long long>& weights);

// Ball incidence matrix of a tree rooted at a central vertex: every vertex
// carries balls of radius 1..max(1, l(v)) where l(v) is the distance to the
// deepest leaf below v. Rows are sorted by decreasing depth; columns sort
// ascending by their bit string read from the bottom row up. The result is
// gamma-free.
ExtendedMatrix tree_ball_matrix(const Graph& g);

struct BroadcastRun {
  Multipacking multipacking;  // support of the dual solution
  Broadcast broadcast;        // selected balls
  std::vector<FarberStep> trace;
};

// The two-stage run over tree_ball_matrix: returns a minimum dominating
// broadcast and a maximum multipacking of equal size.
BroadcastRun farber_broadcast(const Graph& g);

}  // namespace multipack
