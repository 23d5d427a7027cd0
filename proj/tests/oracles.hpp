#pragma once

#include <cstdint>

#include "multipack/graph.hpp"

// Deliberately naive enumeration references, independent of the search code
// they validate.
namespace multipack::oracle {

int domination_number(const Graph& g);
int two_packing_number(const Graph& g);
int multipacking_number(const Graph& g, int k = -1);

// Size-ascending combination scan; multipackings are hereditary, so the first
// size with no valid set ends the search. Reaches beyond the mask oracle.
int multipacking_number_by_size(const Graph& g);

// Exhaustive min-cost ball cover by subset dynamic programming (n <= 20).
int broadcast_number(const Graph& g);

// Tries every vertex permutation (n <= 8).
bool exists_strong_elim_ordering(const Graph& g);

// Does some minimum dominating set cover every vertex exactly once?
bool has_efficient_minimum_dominating_set(const Graph& g);

// Seeded spanning tree plus random extra edges; test fuel only.
Graph random_connected_graph(int n, std::uint64_t seed);

}  // namespace multipack::oracle
