#include "multipack/farber.hpp"

#include <algorithm>
#include <numeric>

#include "multipack/solvers.hpp"

namespace multipack {

EliminationOrdering make_ordering(const Graph& g, std::vector<int> order) {
  if (!check_strong_elim(g, order))
    fail(Errc::InvalidOrdering, "not a strong elimination ordering");
  EliminationOrdering o;
  o.position.assign(g.n, -1);
  for (int t = 0; t < g.n; ++t) o.position[order[t]] = t;
  o.order = std::move(order);
  return o;
}

DominationRun farber_domination(const Graph& g, const EliminationOrdering& ordering,
                                const std::vector<long long>& weights) {
  if (static_cast<int>(ordering.order.size()) != g.n)
    fail(Errc::InvalidOrdering, "ordering does not match the graph");
  if (static_cast<int>(weights.size()) != g.n)
    fail(Errc::ParamOutOfRange, "one weight per vertex required");
  for (long long w : weights)
    if (w <= 0) fail(Errc::NonPositiveWeight, "weights must be positive");

  // h[v] = w_v minus the dual mass already packed around v
  std::vector<long long> h(weights.begin(), weights.end());
  std::vector<long long> y(g.n, 0);
  DominationRun run;

  auto around = [&](int v, auto&& fn) {
    fn(v);
    for (int w : g.adj[v]) fn(w);
  };
  auto slack_snapshot = [&]() {
    std::vector<long long> snap(g.n);
    for (int t = 0; t < g.n; ++t) snap[t] = h[ordering.order[t]];
    return snap;
  };

  for (int t = 0; t < g.n; ++t) {
    int j = ordering.order[t];
    long long m = -1;
    around(j, [&](int k) { m = m < 0 ? h[k] : std::min(m, h[k]); });
    y[j] = m;
    if (m > 0) around(j, [&](int k) { h[k] -= m; });
    run.trace.push_back({"dual", j, {}, m, false, slack_snapshot()});
  }
  for (int v = 0; v < g.n; ++v)
    if (h[v] < 0) fail(Errc::Internal, "negative slack after the dual stage");

  std::vector<char> inT(g.n, 1);
  std::vector<char> x(g.n, 0);
  for (int t = g.n - 1; t >= 0; --t) {
    int i = ordering.order[t];
    bool take = false;
    if (h[i] == 0) {
      take = true;
      around(i, [&](int k) {
        if (y[k] > 0 && !inT[k]) take = false;
      });
    }
    if (take) {
      x[i] = 1;
      around(i, [&](int k) {
        if (y[k] > 0) inT[k] = 0;
      });
    }
    run.trace.push_back({"primal", i, {}, x[i], take, slack_snapshot()});
  }

  run.packing = y;
  for (int v = 0; v < g.n; ++v) {
    run.packing_total += y[v];
    if (x[v]) {
      run.dominating.push_back(v);
      run.dominating_weight += weights[v];
    }
  }
  std::sort(run.dominating.begin(), run.dominating.end());
  if (run.packing_total != run.dominating_weight)
    fail(Errc::Internal, "primal and dual objectives disagree");
  return run;
}

namespace {

struct RootedTree {
  int root = -1;
  std::vector<int> depth;
  std::vector<int> below;  // distance to the deepest leaf in the subtree
};

RootedTree root_at_centre(const Graph& g, const DistanceMatrix& dm) {
  RootedTree t;
  for (int v = 0; v < g.n; ++v)
    if (dm.ecc[v] == dm.radius) t.root = v;  // highest-id centre wins
  t.depth.assign(g.n, -1);
  std::vector<int> order;
  t.depth[t.root] = 0;
  order.push_back(t.root);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    for (int w : g.adj[u])
      if (t.depth[w] < 0) {
        t.depth[w] = t.depth[u] + 1;
        order.push_back(w);
      }
  }
  t.below.assign(g.n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int u = *it;
    for (int w : g.adj[u])
      if (t.depth[w] == t.depth[u] + 1) t.below[u] = std::max(t.below[u], t.below[w] + 1);
  }
  return t;
}

}  // namespace

ExtendedMatrix tree_ball_matrix(const Graph& g) {
  if (!g.is_tree()) fail(Errc::NotATree, "ball matrix construction needs a tree");
  if (g.n < 2) fail(Errc::TrivialGraph, "needs n >= 2");
  auto dm = distance_matrix(g);
  auto rooted = root_at_centre(g, dm);

  std::vector<int> rows(g.n);
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) {
    return rooted.depth[a] > rooted.depth[b];
  });

  struct Col {
    ColumnKey key;
    std::vector<std::uint8_t> bits;  // in row order
  };
  std::vector<Col> cols;
  for (int v = 0; v < g.n; ++v)
    for (int r = 1; r <= std::max(1, rooted.below[v]); ++r) {
      Col c{{v, r}, std::vector<std::uint8_t>(g.n, 0)};
      for (int i = 0; i < g.n; ++i)
        if (dm.dist[rows[i]][v] <= r) c.bits[i] = 1;
      cols.push_back(std::move(c));
    }
  // ascending by the column read from the bottom row up
  std::sort(cols.begin(), cols.end(), [&](const Col& a, const Col& b) {
    for (int i = g.n - 1; i >= 0; --i)
      if (a.bits[i] != b.bits[i]) return a.bits[i] < b.bits[i];
    if (a.key.vertex != b.key.vertex) return a.key.vertex < b.key.vertex;
    return a.key.radius < b.key.radius;
  });

  ExtendedMatrix out;
  out.row_index = rows;
  out.m.rows = g.n;
  out.m.cols = static_cast<int>(cols.size());
  out.m.row_labels = rows;
  out.m.bits.assign(static_cast<std::size_t>(g.n) * cols.size(), 0);
  for (int c = 0; c < out.m.cols; ++c) {
    out.col_index.push_back(cols[c].key);
    out.col_cost.push_back(cols[c].key.radius);
    out.m.col_labels.push_back(c);
    for (int r = 0; r < g.n; ++r) out.m.set(r, c, cols[c].bits[r]);
  }
  return out;
}

BroadcastRun farber_broadcast(const Graph& g) {
  auto a = tree_ball_matrix(g);
  const int rows = a.m.rows, cols = a.m.cols;

  std::vector<std::vector<int>> cols_of(g.n);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r)
      if (a.m.at(r, c)) cols_of[a.row_index[r]].push_back(c);

  std::vector<long long> h(cols);
  for (int c = 0; c < cols; ++c) h[c] = a.col_cost[c];
  std::vector<long long> y(g.n, 0);
  BroadcastRun run;
  auto slack_snapshot = [&]() { return h; };

  for (int r = 0; r < rows; ++r) {  // Stage 1 in row order
    int j = a.row_index[r];
    if (cols_of[j].empty()) fail(Errc::Internal, "vertex with no incident ball");
    long long m = h[cols_of[j].front()];
    for (int c : cols_of[j]) m = std::min(m, h[c]);
    y[j] = m;
    if (m > 0)
      for (int c : cols_of[j]) h[c] -= m;
    run.trace.push_back({"dual", j, {}, m, false, slack_snapshot()});
  }
  for (int c = 0; c < cols; ++c)
    if (h[c] < 0) fail(Errc::Internal, "negative slack after the dual stage");

  std::vector<char> inT(g.n, 1);
  run.broadcast.power.assign(g.n, 0);
  for (int c = cols - 1; c >= 0; --c) {  // Stage 2 in descending column order
    bool take = false;
    if (h[c] == 0) {
      take = true;
      for (int r = 0; r < rows && take; ++r) {
        int v = a.row_index[r];
        if (a.m.at(r, c) && y[v] > 0 && !inT[v]) take = false;
      }
    }
    if (take) {
      auto key = a.col_index[c];
      if (run.broadcast.power[key.vertex] != 0)
        fail(Errc::Internal, "two balls selected at one centre");
      run.broadcast.power[key.vertex] = key.radius;
      for (int r = 0; r < rows; ++r) {
        int v = a.row_index[r];
        if (a.m.at(r, c) && y[v] > 0) inT[v] = 0;
      }
    }
    run.trace.push_back({"primal", -1, a.col_index[c], take ? 1 : 0, take, slack_snapshot()});
  }

  run.multipacking.k = distance_matrix(g).diameter;
  long long total = 0;
  for (int v = 0; v < g.n; ++v) {
    if (y[v] > 1) fail(Errc::Internal, "dual value above one despite unit ball columns");
    if (y[v] > 0) run.multipacking.members.push_back(v);
    total += y[v];
  }
  if (total != run.broadcast.cost())
    fail(Errc::Internal, "primal and dual objectives disagree");
  auto check = verify_dominating_broadcast(g, run.broadcast);
  if (!check.dominating) fail(Errc::Internal, "selected balls do not dominate");
  auto mpcheck = verify_multipacking(g, run.multipacking.members, run.multipacking.k);
  if (!mpcheck.valid) fail(Errc::Internal, "dual support is not a multipacking");
  return run;
}

}  // namespace multipack
