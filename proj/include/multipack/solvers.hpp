#pragma once

#include <array>
#include <string>
#include <vector>

#include "multipack/graph.hpp"
#include "multipack/lp.hpp"

namespace multipack {

// Exact solvers are desk-scale: inputs above this size are rejected rather
// than left to run unbounded.
inline constexpr int kSolverVertexLimit = 40;

struct SetResult {
  int value = 0;
  std::vector<int> certificate;  // lexicographically least optimal set
  long long nodes_explored = 0;
};

struct BroadcastResult {
  int value = 0;
  Broadcast certificate;  // deterministic optimal cover, one power per centre
  long long nodes_explored = 0;
};

SetResult domination_number(const Graph& g);
SetResult two_packing_number(const Graph& g);
// k defaults to the diameter; 1 <= k <= diameter otherwise.
SetResult multipacking_number(const Graph& g, int k = -1);
BroadcastResult broadcast_number(const Graph& g);

// Every third vertex of the canonical diametrical path; always verifies and
// has size ceil((diam+1)/3).
Multipacking diametrical_lower_bound(const Graph& g);

struct BroadcastCheck {
  bool dominating = false;
  std::vector<int> uncovered;
};
BroadcastCheck verify_dominating_broadcast(const Graph& g, const Broadcast& b);

struct MultipackingCheck {
  bool valid = true;
  int vertex = -1;  // violating ball centre
  int radius = -1;  // violating radius s
};
MultipackingCheck verify_multipacking(const Graph& g, const std::vector<int>& members, int k);

// True iff every vertex hears exactly one broadcast ball. Requires a
// dominating input broadcast.
bool verify_efficient(const Graph& g, const Broadcast& b);

struct BoundReport {
  int diameter = 0;
  int radius = 0;
  int diameter_lb = 0;  // ceil((diam+1)/3)
  int mp = 0;
  int gamma_b = 0;
  int gamma = 0;
  int rho = 0;
  bool chain_ok = false;        // diameter_lb <= mp <= gamma_b <= min(radius, gamma)
  bool ratio_ok = false;        // gamma_b < 3 mp, and gamma_b <= 3 mp - 2 when mp >= 2
  bool mp_equals_gamma_b = false;
  Rat ratio;                    // gamma_b / mp
};
BoundReport bound_report(const Graph& g);

struct FactResult {
  bool pass = true;
  bool vacuous = false;          // quantified sets were empty
  std::vector<int> witness;      // offending vertex tuple when failing
  std::string detail;
};

// Seven structural distance conditions over the layers V_i = {x : d(x,alpha)=i}
// of a peripheral vertex; meaningful for candidates with mp=3, gamma_b=7 but
// evaluable on any graph.
std::array<FactResult, 7> extremal_facts_check(const Graph& g, int alpha);

}  // namespace multipack
