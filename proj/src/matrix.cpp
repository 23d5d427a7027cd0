#include "multipack/matrix.hpp"

#include <algorithm>
#include <numeric>

namespace multipack {

namespace {

void require_permutation(int n, const std::vector<int>& ordering) {
  if (static_cast<int>(ordering.size()) != n)
    fail(Errc::InvalidPermutation, "ordering length does not match vertex count");
  std::vector<char> seen(n, 0);
  for (int v : ordering) {
    if (v < 0 || v >= n || seen[v])
      fail(Errc::InvalidPermutation, "ordering is not a permutation of 0..n-1");
    seen[v] = 1;
  }
}

}  // namespace

BinaryMatrix neighbourhood_matrix(const Graph& g, const std::vector<int>& ordering) {
  require_permutation(g.n, ordering);
  BinaryMatrix m;
  m.rows = m.cols = g.n;
  m.bits.assign(static_cast<std::size_t>(g.n) * g.n, 0);
  m.row_labels = ordering;
  m.col_labels = ordering;
  for (int r = 0; r < g.n; ++r)
    for (int c = 0; c < g.n; ++c) {
      int u = ordering[r], v = ordering[c];
      m.set(r, c, (u == v || g.has_edge(u, v)) ? 1 : 0);
    }
  return m;
}

ExtendedMatrix extended_matrix(const Graph& g, const DistanceMatrix& d) {
  if (g.n < 2) fail(Errc::TrivialGraph, "extended matrix needs n >= 2");
  ExtendedMatrix a;
  for (int v = 0; v < g.n; ++v)
    for (int k = 1; k <= d.ecc[v]; ++k) {
      a.col_index.push_back({v, k});
      a.col_cost.push_back(k);
    }
  a.row_index.resize(g.n);
  std::iota(a.row_index.begin(), a.row_index.end(), 0);
  a.m.rows = g.n;
  a.m.cols = static_cast<int>(a.col_index.size());
  a.m.bits.assign(static_cast<std::size_t>(a.m.rows) * a.m.cols, 0);
  a.m.row_labels = a.row_index;
  for (int c = 0; c < a.m.cols; ++c) {
    a.m.col_labels.push_back(c);
    for (int r = 0; r < g.n; ++r)
      if (d.dist[r][a.col_index[c].vertex] <= a.col_index[c].radius) a.m.set(r, c, 1);
  }
  return a;
}

std::optional<GammaWitness> gamma_free_check(const BinaryMatrix& m) {
  // Nested in (r1, r2, c1, c2) order so the first hit is the lex-least witness.
  for (int r1 = 0; r1 < m.rows; ++r1)
    for (int r2 = r1 + 1; r2 < m.rows; ++r2)
      for (int c1 = 0; c1 < m.cols; ++c1) {
        if (!m.at(r1, c1) || !m.at(r2, c1)) continue;
        for (int c2 = c1 + 1; c2 < m.cols; ++c2)
          if (m.at(r1, c2) && !m.at(r2, c2)) return GammaWitness{r1, r2, c1, c2};
      }
  return std::nullopt;
}

namespace {

// Is the chosen square submatrix a row/column permutation of a cycle
// incidence matrix? Equivalent: all row and column sums are 2 and the
// bipartite row-column graph is one connected cycle.
bool is_cycle_incidence(const BinaryMatrix& m, const std::vector<int>& rs,
                        const std::vector<int>& cs) {
  int k = static_cast<int>(rs.size());
  for (int i = 0; i < k; ++i) {
    int sum = 0;
    for (int j = 0; j < k; ++j) sum += m.at(rs[i], cs[j]);
    if (sum != 2) return false;
  }
  for (int j = 0; j < k; ++j) {
    int sum = 0;
    for (int i = 0; i < k; ++i) sum += m.at(rs[i], cs[j]);
    if (sum != 2) return false;
  }
  // 2-regular bipartite graph on 2k nodes is a disjoint union of cycles;
  // connected means a single cycle.
  std::vector<char> seen(2 * k, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    if (x < k) {
      for (int j = 0; j < k; ++j)
        if (m.at(rs[x], cs[j]) && !seen[k + j]) {
          seen[k + j] = 1;
          ++reached;
          stack.push_back(k + j);
        }
    } else {
      for (int i = 0; i < k; ++i)
        if (m.at(rs[i], cs[x - k]) && !seen[i]) {
          seen[i] = 1;
          ++reached;
          stack.push_back(i);
        }
    }
  }
  return reached == 2 * k;
}

bool any_cycle_submatrix(const BinaryMatrix& m, int k, std::vector<int>& rs,
                         std::vector<int>& cs, int next_row, int next_col) {
  if (static_cast<int>(rs.size()) < k) {
    for (int r = next_row; r <= m.rows - (k - static_cast<int>(rs.size())); ++r) {
      rs.push_back(r);
      if (any_cycle_submatrix(m, k, rs, cs, r + 1, 0)) return true;
      rs.pop_back();
    }
    return false;
  }
  if (static_cast<int>(cs.size()) < k) {
    for (int c = next_col; c <= m.cols - (k - static_cast<int>(cs.size())); ++c) {
      cs.push_back(c);
      if (any_cycle_submatrix(m, k, rs, cs, next_row, c + 1)) return true;
      cs.pop_back();
    }
    return false;
  }
  return is_cycle_incidence(m, rs, cs);
}

}  // namespace

bool totally_balanced(const BinaryMatrix& m) {
  if (m.rows > 12 || m.cols > 12)
    fail(Errc::ResourceLimit, "exhaustive balance test capped at 12x12");
  int kmax = std::min(m.rows, m.cols);
  for (int k = 3; k <= kmax; ++k) {
    std::vector<int> rs, cs;
    if (any_cycle_submatrix(m, k, rs, cs, 0, 0)) return false;
  }
  return true;
}

namespace {

using Mask = std::uint64_t;

// Closed neighbourhood masks within the induced subgraph `alive`.
std::vector<Mask> closed_masks(const Graph& g, Mask alive) {
  std::vector<Mask> nb(g.n, 0);
  for (int v = 0; v < g.n; ++v) {
    if (!(alive >> v & 1)) continue;
    nb[v] = Mask(1) << v;
    for (int w : g.adj[v])
      if (alive >> w & 1) nb[v] |= Mask(1) << w;
  }
  return nb;
}

bool is_simple(const Graph& g, const std::vector<Mask>& nb, int v) {
  // neighbours' closed neighbourhoods must be totally ordered by inclusion
  std::vector<int> nbrs;
  for (int w = 0; w < g.n; ++w)
    if (nb[v] >> w & 1) nbrs.push_back(w);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      Mask a = nb[nbrs[i]], b = nb[nbrs[j]];
      if ((a & ~b) != 0 && (b & ~a) != 0) return false;
    }
  return true;
}

}  // namespace

ChordalityReport strongly_chordal(const Graph& g) {
  if (g.n > 64) fail(Errc::ResourceLimit, "recognition capped at 64 vertices");
  ChordalityReport report;
  Mask alive = g.n == 64 ? ~Mask(0) : (Mask(1) << g.n) - 1;
  // strict partial order grown round by round, kept transitively closed
  std::vector<std::vector<char>> less(g.n, std::vector<char>(g.n, 0));
  for (int round = 0; round < g.n; ++round) {
    auto nb = closed_masks(g, alive);
    std::vector<int> simple;
    for (int v = 0; v < g.n; ++v)
      if ((alive >> v & 1) && is_simple(g, nb, v)) simple.push_back(v);
    if (simple.empty()) {
      report.verdict = ChordalityVerdict::NotStronglyChordal;
      for (int v = 0; v < g.n; ++v)
        if (alive >> v & 1) report.witness.push_back(v);
      return report;
    }
    for (int v = 0; v < g.n; ++v) {
      if (!(alive >> v & 1)) continue;
      for (int u = 0; u < g.n; ++u) {
        if (u == v || !(alive >> u & 1)) continue;
        if ((nb[v] & ~nb[u]) == 0 && nb[v] != nb[u]) less[v][u] = 1;
      }
    }
    for (int k = 0; k < g.n; ++k)  // transitive closure
      for (int i = 0; i < g.n; ++i)
        if (less[i][k])
          for (int j = 0; j < g.n; ++j)
            if (less[k][j]) less[i][j] = 1;
    int pick = -1;
    for (int v : simple) {
      bool minimal = true;
      for (int u = 0; u < g.n && minimal; ++u)
        if ((alive >> u & 1) && u != v && less[u][v]) minimal = false;
      if (minimal) {
        pick = v;
        break;  // simple list is ascending, first minimal is the lowest id
      }
    }
    // Below a simple vertex every vertex is simple (contained neighbourhoods
    // stay contained), so a minimal simple vertex always exists.
    if (pick < 0) fail(Errc::Internal, "no minimal simple vertex");
    report.ordering.push_back(pick);
    alive &= ~(Mask(1) << pick);
  }
  report.verdict = ChordalityVerdict::StronglyChordal;
  return report;
}

bool check_strong_elim(const Graph& g, const std::vector<int>& ordering) {
  require_permutation(g.n, ordering);
  auto sim = [&](int a, int b) { return a == b || g.has_edge(a, b); };
  for (int i = 0; i < g.n; ++i)
    for (int j = i; j < g.n; ++j)
      for (int k = 0; k < g.n; ++k) {
        if (!sim(ordering[i], ordering[k]) || !sim(ordering[j], ordering[k])) continue;
        for (int l = k; l < g.n; ++l)
          if (sim(ordering[i], ordering[l]) && !sim(ordering[j], ordering[l]))
            return false;
      }
  return true;
}

}  // namespace multipack
