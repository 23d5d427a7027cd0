#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "multipack/graph.hpp"

namespace multipack {

struct BinaryMatrix {
  int rows = 0, cols = 0;
  std::vector<std::uint8_t> bits;  // row-major 0/1
  std::vector<int> row_labels;     // opaque tags, usually vertex ids
  std::vector<int> col_labels;

  std::uint8_t at(int r, int c) const { return bits[static_cast<std::size_t>(r) * cols + c]; }
  void set(int r, int c, std::uint8_t v) { bits[static_cast<std::size_t>(r) * cols + c] = v; }
};

struct ColumnKey {
  int vertex = -1;
  int radius = 0;

  friend bool operator==(const ColumnKey&, const ColumnKey&) = default;
};

// 0/1 incidence of vertices x balls N_k[v]; column (v,k) costs k.
struct ExtendedMatrix {
  BinaryMatrix m;
  std::vector<int> row_index;        // row -> vertex id
  std::vector<ColumnKey> col_index;  // column -> (vertex, radius)
  std::vector<int> col_cost;
};

// Closed-neighbourhood incidence in the given row/column order.
BinaryMatrix neighbourhood_matrix(const Graph& g, const std::vector<int>& ordering);

// Columns (j,k) for every vertex j and 1 <= k <= ecc(j), vertex-major,
// radius ascending. Rejects n = 1.
ExtendedMatrix extended_matrix(const Graph& g, const DistanceMatrix& d);

struct GammaWitness {
  int r1, r2, c1, c2;
};

// nullopt iff no index pairs r1<r2, c1<c2 carry the pattern [[1,1],[1,0]];
// otherwise the lexicographically least such (r1,r2,c1,c2).
std::optional<GammaWitness> gamma_free_check(const BinaryMatrix& m);

// Desk-scale exhaustive test (up to 12x12): no submatrix is the edge-vertex
// incidence matrix of a cycle of length >= 3.
bool totally_balanced(const BinaryMatrix& m);

enum class ChordalityVerdict { StronglyChordal, NotStronglyChordal };

struct ChordalityReport {
  ChordalityVerdict verdict = ChordalityVerdict::NotStronglyChordal;
  std::vector<int> ordering;  // strong elimination ordering when strongly chordal
  std::vector<int> witness;   // induced subgraph with no simple vertex otherwise
};

// Simple-vertex elimination: returns a strong elimination ordering, or the
// vertex set of an induced subgraph without a simple vertex.
ChordalityReport strongly_chordal(const Graph& g);

// Direct quadruple-loop check of the strong elimination property; kept
// independent of gamma_free_check so the two can cross-validate.
bool check_strong_elim(const Graph& g, const std::vector<int>& ordering);

}  // namespace multipack
