#include "multipack/treemp.hpp"

#include <algorithm>
#include <deque>

namespace multipack {

namespace {

void require_tree(const Graph& g) {
  if (!g.is_tree()) fail(Errc::NotATree, "operation defined on trees only");
  if (g.n < 2) fail(Errc::TrivialGraph, "needs n >= 2");
}

std::pair<int, int> span_of(const ShadowBranch& b, int d) {
  return {std::max(0, b.pos - b.length()), std::min(d, b.pos + b.length())};
}

bool span_inside(std::pair<int, int> a, std::pair<int, int> b) {
  return b.first <= a.first && a.second <= b.second;
}

// Deterministic branch order: by position, longer first, then lowest tip id.
bool branch_before(const ShadowBranch& a, const ShadowBranch& b) {
  if (a.pos != b.pos) return a.pos < b.pos;
  if (a.length() != b.length()) return a.length() > b.length();
  return a.verts.front() < b.verts.front();
}

// Removes branches whose span lies inside another live branch's span.
// Equal spans arise when a shifted branch lands on a vertex that already
// carries one; the incumbent must be the branch that dies, or the split edge
// recorded by the shift would go stale. The age stamp encodes that.
template <typename OnDelete>
void prune_nested(std::vector<ShadowBranch>& branches, int d, OnDelete&& on_delete) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(branches.begin(), branches.end(), branch_before);
    for (std::size_t i = 0; i < branches.size() && !changed; ++i)
      for (std::size_t j = 0; j < branches.size(); ++j) {
        if (i == j) continue;
        auto si = span_of(branches[i], d), sj = span_of(branches[j], d);
        if (!span_inside(si, sj)) continue;
        if (si == sj && branches[i].age >= branches[j].age) continue;
        on_delete(branches[i]);
        branches.erase(branches.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
  }
}

}  // namespace

ShadowTree shadow_tree(const Graph& g) {
  require_tree(g);
  auto dm = distance_matrix(g);
  ShadowTree st;
  st.path = diametrical_path(g, dm);
  const int d = static_cast<int>(st.path.size()) - 1;
  std::vector<char> on_path(g.n, 0);
  for (int v : st.path) on_path[v] = 1;

  for (int i = 0; i <= d; ++i) {
    int root = st.path[i];
    // hanging component at path[i]: reachable without crossing other path vertices
    std::vector<int> parent(g.n, -1);
    std::vector<int> comp{root};
    parent[root] = root;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      int u = comp[head];
      for (int w : g.adj[u]) {
        if (parent[w] >= 0 || (on_path[w] && w != root)) continue;
        parent[w] = u;
        comp.push_back(w);
      }
    }
    int tip = root;
    for (int u : comp)
      if (dm.dist[root][u] > dm.dist[root][tip] ||
          (dm.dist[root][u] == dm.dist[root][tip] && u < tip))
        tip = u;
    if (tip == root) continue;
    ShadowBranch b;
    b.pos = i;
    for (int u = tip; u != root; u = parent[u]) b.verts.push_back(u);
    std::reverse(b.verts.begin(), b.verts.end());
    st.branches.push_back(std::move(b));
  }

  prune_nested(st.branches, d, [&](const ShadowBranch& b) { st.pruned.push_back(b); });

  std::vector<char> covered(std::max(0, d), 0);
  for (const auto& b : st.branches) {
    auto span = span_of(b, d);
    st.triangles.push_back(span);
    for (int e = span.first; e < span.second; ++e) covered[e] = 1;
  }
  for (int e = 0; e < d; ++e)
    if (!covered[e]) st.free_edges.emplace_back(e, e + 1);
  return st;
}

namespace {

// Working state of the tail-trimming scan. The current tree is always the
// path plus the hanging branch paths; every vertex keeps its original id.
struct Scan {
  std::vector<int> path;
  std::vector<ShadowBranch> branches;
  std::vector<int> picks;
  std::vector<std::pair<int, int>> splits;  // every split edge ever recorded
  // Split chains of branches that made it onto the path, in commit order.
  // A chain (u,v),(v,w) says: a pick of u was made while that branch content
  // sat two steps left of its true position, so the pick belongs at w.
  std::vector<std::vector<std::pair<int, int>>> committed;
  TreeMpRun* run = nullptr;
  int age = 0;

  void commit(ShadowBranch& b) {
    if (!b.pending.empty()) {
      committed.push_back(std::move(b.pending));
      b.pending.clear();
    }
  }

  int d() const { return static_cast<int>(path.size()) - 1; }

  int tree_size() const {
    int total = static_cast<int>(path.size());
    for (const auto& b : branches) total += b.length();
    return total;
  }

  void record(const std::string& op) {
    if (run) run->trace.push_back({op, picks, path, splits, tree_size()});
  }

  // Trees on at most three vertices are exactly the short paths the loop
  // guard excludes.
  bool is_short_path() const { return tree_size() <= 3; }

  // last branch = highest position; ties resolve by the branch order
  int last_branch() const {
    int best = -1;
    for (std::size_t i = 0; i < branches.size(); ++i) {
      if (best < 0 || branches[i].pos > branches[best].pos ||
          (branches[i].pos == branches[best].pos &&
           branch_before(branches[i], branches[best])))
        best = static_cast<int>(i);
    }
    return best;
  }

  int trailing_free_edges() const {
    if (branches.empty()) return d();
    int hi = 0;
    for (const auto& b : branches) hi = std::max(hi, span_of(b, d()).second);
    return d() - hi;
  }

  void drop_tail3() {
    for (int step = 0; step < 3; ++step) path.pop_back();
  }

  // P <- P - Q_c + B_c after a tail trim: the branch becomes the path end and
  // the leftover endpath hangs at the branch vertex.
  void swap_tail(int bi) {
    ShadowBranch b = branches[bi];
    branches.erase(branches.begin() + bi);
    commit(b);
    std::vector<int> leftover(path.begin() + b.pos + 1, path.end());
    path.resize(b.pos + 1);
    path.insert(path.end(), b.verts.begin(), b.verts.end());
    if (!leftover.empty()) {
      ShadowBranch left;
      left.pos = b.pos;
      left.verts = std::move(leftover);
      branches.push_back(std::move(left));
    }
  }

  // P <- P - Q_1 + B_c when the only branch position is the first one: the
  // branch (reversed) becomes the path start, the old prefix hangs off it.
  void swap_leading(int bi) {
    ShadowBranch b = branches[bi];
    branches.erase(branches.begin() + bi);
    commit(b);
    std::vector<int> prefix(path.begin(), path.begin() + b.pos);
    std::reverse(prefix.begin(), prefix.end());  // outward order from the attach vertex
    std::vector<int> newpath(b.verts.rbegin(), b.verts.rend());
    newpath.insert(newpath.end(), path.begin() + b.pos, path.end());
    int delta = b.length() - b.pos;
    for (auto& other : branches) other.pos += delta;
    path = std::move(newpath);
    if (!prefix.empty()) {
      ShadowBranch front;
      front.pos = b.length();
      front.verts = std::move(prefix);
      branches.push_back(std::move(front));
    }
  }
};

}  // namespace

TreeMpRun find_tree_multipacking_run(const Graph& g) {
  require_tree(g);
  TreeMpRun run;
  auto st = shadow_tree(g);

  Scan scan;
  scan.path = st.path;
  scan.branches = st.branches;
  scan.run = &run;
  scan.record("shadow");

  const int limit = 10 * (g.n + 5);
  while (!scan.is_short_path()) {
    if (++run.iterations > limit) fail(Errc::Internal, "tail scan failed to terminate");

    if (!scan.branches.empty()) {
      int first_pos = scan.branches.front().pos;
      for (const auto& b : scan.branches) first_pos = std::min(first_pos, b.pos);
      int bi = scan.last_branch();
      if (scan.branches[bi].pos == first_pos &&
          scan.branches[bi].length() > first_pos) {
        scan.swap_leading(bi);
        scan.record("leading_swap");
      }
    }

    int deleted = 0;
    prune_nested(scan.branches, scan.d(), [&](const ShadowBranch&) { ++deleted; });
    if (deleted > 0) scan.record("nested_delete");

    int trailing = scan.trailing_free_edges();
    if (trailing >= 3) {
      scan.picks.push_back(scan.path.back());
      scan.drop_tail3();
      scan.record("take3");
    } else if (trailing == 2) {
      scan.picks.push_back(scan.path.back());
      scan.drop_tail3();
      int bi = scan.last_branch();
      if (bi >= 0) scan.swap_tail(bi);
      scan.record("take2_swap");
    } else if (trailing == 1) {
      int bi = scan.last_branch();
      ShadowBranch& b = scan.branches[bi];
      if (b.pos < 1) fail(Errc::Internal, "shift with no vertex before the branch");
      scan.splits.emplace_back(scan.path[b.pos], scan.path[b.pos - 1]);
      b.pending.emplace_back(scan.path[b.pos], scan.path[b.pos - 1]);
      b.pos -= 1;
      b.age = ++scan.age;
      scan.record("shift");
    } else {
      int bi = scan.last_branch();
      scan.branches[bi].verts.pop_back();
      if (scan.branches[bi].verts.empty())
        scan.branches.erase(scan.branches.begin() + bi);
      scan.record("shrink");
    }
  }

  scan.picks.push_back(scan.path.front());
  scan.record("final");

  // Reposition picks across the committed split chains, newest first. Only
  // chains whose branch reached the path fire; a chain moves its head pick to
  // the chain's final target. Splits of branches that died before reaching
  // the path were dropped with the branch.
  for (auto it = scan.committed.rbegin(); it != scan.committed.rend(); ++it) {
    int head = it->front().first;
    int target = it->back().second;
    auto hit = std::find(scan.picks.begin(), scan.picks.end(), head);
    if (hit != scan.picks.end()) {
      *hit = target;
      scan.record("end_swap");
    }
  }

  run.split_edges = scan.splits;
  run.multipacking.members = scan.picks;
  std::sort(run.multipacking.members.begin(), run.multipacking.members.end());
  if (std::adjacent_find(run.multipacking.members.begin(),
                         run.multipacking.members.end()) != run.multipacking.members.end())
    fail(Errc::Internal, "duplicate pick after end swaps");
  run.multipacking.k = distance_matrix(g).diameter;
  return run;
}

Multipacking find_tree_multipacking(const Graph& g) {
  return find_tree_multipacking_run(g).multipacking;
}

bool verify_split_set(const Graph& g, const std::vector<int>& path,
                      const std::vector<std::pair<int, int>>& edges) {
  require_tree(g);
  std::vector<int> pos(g.n, -1);
  for (std::size_t i = 0; i < path.size(); ++i) {
    int v = path[i];
    if (v < 0 || v >= g.n || pos[v] >= 0) fail(Errc::ParamOutOfRange, "invalid path");
    pos[v] = static_cast<int>(i);
    if (i > 0 && !g.has_edge(path[i - 1], v)) fail(Errc::ParamOutOfRange, "invalid path");
  }
  auto on_path_edge = [&](int u, int v) {
    return pos[u] >= 0 && pos[v] >= 0 && std::abs(pos[u] - pos[v]) == 1;
  };
  std::vector<std::pair<int, int>> cut;
  for (auto [u, v] : edges) {
    if (u < 0 || u >= g.n || v < 0 || v >= g.n || !on_path_edge(u, v))
      fail(Errc::EdgeNotOnPath, "split edges must lie on the path");
    cut.emplace_back(std::min(u, v), std::max(u, v));
  }
  auto is_cut = [&](int u, int v) {
    auto e = std::make_pair(std::min(u, v), std::max(u, v));
    return std::find(cut.begin(), cut.end(), e) != cut.end();
  };

  std::vector<int> comp(g.n, -1);
  int ncomp = 0;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int w : g.adj[u])
        if (comp[w] < 0 && !is_cut(u, w)) {
          comp[w] = ncomp;
          queue.push_back(w);
        }
    }
    ++ncomp;
  }

  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
      if (comp[v] == c) verts.push_back(v);
    // component diameter by BFS inside the component
    int diam = 0;
    for (int s : verts) {
      std::vector<int> dist(g.n, -1);
      dist[s] = 0;
      std::deque<int> queue{s};
      while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int w : g.adj[u])
          if (comp[w] == c && dist[w] < 0 && !is_cut(u, w)) {
            dist[w] = dist[u] + 1;
            queue.push_back(w);
          }
      }
      for (int v : verts) diam = std::max(diam, dist[v]);
    }
    if (diam <= 0 || diam % 2 != 0) return false;
    int seg = -1;  // path vertices inside the component form one contiguous run
    for (int v : verts)
      if (pos[v] >= 0) ++seg;
    if (seg < 0) return false;  // a component must meet the path
    if (seg != diam) return false;
  }
  return true;
}

}  // namespace multipack
