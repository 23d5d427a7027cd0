#include "multipack/lp.hpp"

#include <algorithm>

namespace multipack {

std::string rat_to_string(const Rat& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& text) {
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), text.c_str(), 10) != 0 || r.get_den() == 0)
    fail(Errc::ParamOutOfRange, "not a rational: '" + text + "'");
  r.canonicalize();
  return r;
}

Rat FractionalWeighting::total() const {
  Rat sum = 0;
  for (const Rat& w : weights) sum += w;
  return sum;
}

namespace {

// Dense tableau primal simplex with Bland's rule, exact rationals.
// Solves max 1.y s.t. yA <= c, y >= 0, where A is the extended neighbourhood
// matrix: one LP constraint per ball, one variable per vertex. The slack
// basis is feasible (all costs >= 1), so no phase one is needed.
class PackSimplex {
 public:
  explicit PackSimplex(const ExtendedMatrix& a)
      : vars_(a.m.rows), cons_(a.m.cols), tableau_(cons_ + 1), basis_(cons_) {
    int width = vars_ + cons_ + 1;
    for (auto& row : tableau_) row.assign(width, Rat(0));
    for (int i = 0; i < cons_; ++i) {
      for (int j = 0; j < vars_; ++j)
        if (a.m.at(j, i)) tableau_[i][j] = 1;
      tableau_[i][vars_ + i] = 1;
      tableau_[i][width - 1] = a.col_cost[i];
      basis_[i] = vars_ + i;
    }
    for (int j = 0; j < vars_; ++j) tableau_[cons_][j] = 1;  // maximize 1.y
  }

  LpStatus run() {
    const int rhs = vars_ + cons_;
    while (true) {
      int entering = -1;
      for (int j = 0; j < rhs; ++j)
        if (tableau_[cons_][j] > 0) {
          entering = j;
          break;  // Bland: lowest index
        }
      if (entering < 0) return LpStatus::Optimal;
      int leaving = -1;
      Rat best_ratio;
      for (int i = 0; i < cons_; ++i) {
        if (tableau_[i][entering] <= 0) continue;
        Rat ratio = tableau_[i][rhs] / tableau_[i][entering];
        if (leaving < 0 || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving < 0) return LpStatus::Unbounded;
      pivot(leaving, entering);
      ++pivots_;
    }
  }

  Rat optimum() const { return -tableau_[cons_][vars_ + cons_]; }

  std::vector<Rat> packing() const {
    std::vector<Rat> y(vars_, Rat(0));
    for (int i = 0; i < cons_; ++i)
      if (basis_[i] < vars_) y[basis_[i]] = tableau_[i][vars_ + cons_];
    return y;
  }

  std::vector<Rat> covering() const {
    std::vector<Rat> x(cons_, Rat(0));
    for (int i = 0; i < cons_; ++i) x[i] = -tableau_[cons_][vars_ + i];
    return x;
  }

  long long pivots() const { return pivots_; }

 private:
  void pivot(int row, int col) {
    auto& prow = tableau_[row];
    Rat inv = prow[col];
    for (Rat& x : prow)
      if (x != 0) x /= inv;
    prow[col] = 1;
    for (int i = 0; i <= cons_; ++i) {
      if (i == row) continue;
      Rat factor = tableau_[i][col];
      if (factor == 0) continue;
      auto& irow = tableau_[i];
      for (int j = 0; j < vars_ + cons_ + 1; ++j)
        if (prow[j] != 0) irow[j] -= factor * prow[j];
      irow[col] = 0;
    }
    basis_[row] = col;
  }

  int vars_, cons_;
  std::vector<std::vector<Rat>> tableau_;
  std::vector<int> basis_;
  long long pivots_ = 0;
};

void check_certificates(const ExtendedMatrix& a, const std::vector<Rat>& y,
                        const std::vector<Rat>& x, const Rat& opt) {
  Rat ysum = 0;
  for (int j = 0; j < a.m.rows; ++j) {
    if (y[j] < 0) fail(Errc::Internal, "negative packing weight");
    ysum += y[j];
  }
  Rat xsum = 0;
  for (int i = 0; i < a.m.cols; ++i) {
    if (x[i] < 0) fail(Errc::Internal, "negative cover weight");
    xsum += x[i] * a.col_cost[i];
  }
  if (ysum != opt || xsum != opt)
    fail(Errc::Internal, "lp objectives disagree with the reported optimum");
  for (int i = 0; i < a.m.cols; ++i) {  // yA <= c
    Rat sum = 0;
    for (int j = 0; j < a.m.rows; ++j)
      if (a.m.at(j, i)) sum += y[j];
    if (sum > a.col_cost[i]) fail(Errc::Internal, "packing certificate infeasible");
  }
  for (int j = 0; j < a.m.rows; ++j) {  // Ax >= 1
    Rat sum = 0;
    for (int i = 0; i < a.m.cols; ++i)
      if (a.m.at(j, i)) sum += x[i];
    if (sum < 1) fail(Errc::Internal, "cover certificate infeasible");
  }
}

}  // namespace

LpResult solve_lp(const ExtendedMatrix& a, LpSense sense) {
  if (a.m.rows == 0 || a.m.cols == 0) fail(Errc::ParamOutOfRange, "empty matrix");
  if (a.m.cols > 2000)
    fail(Errc::ResourceLimit, "dense exact simplex limited to 2000 columns");
  PackSimplex simplex(a);
  LpResult result;
  result.status = simplex.run();
  result.pivots = simplex.pivots();
  if (result.status != LpStatus::Optimal) return result;
  result.optimum = simplex.optimum();
  auto y = simplex.packing();
  auto x = simplex.covering();
  check_certificates(a, y, x, result.optimum);
  if (sense == LpSense::Pack) {
    result.primal_solution = std::move(y);
    result.dual_solution = std::move(x);
  } else {
    result.primal_solution = std::move(x);
    result.dual_solution = std::move(y);
  }
  return result;
}

std::pair<Rat, FractionalWeighting> fractional_multipacking_number(const Graph& g) {
  if (g.n < 2) fail(Errc::TrivialGraph, "fractional multipacking needs n >= 2");
  auto dm = distance_matrix(g);
  auto a = extended_matrix(g, dm);
  auto lp = solve_lp(a, LpSense::Pack);
  if (lp.status != LpStatus::Optimal) fail(Errc::Internal, "pack lp must be optimal");
  FractionalWeighting w;
  w.weights = lp.primal_solution;
  return {lp.optimum, std::move(w)};
}

FractionalCheck verify_fractional(const Graph& g, const FractionalWeighting& y) {
  if (static_cast<int>(y.weights.size()) != g.n)
    fail(Errc::ParamOutOfRange, "weight vector length must equal vertex count");
  for (const Rat& w : y.weights)
    if (w < 0) fail(Errc::ParamOutOfRange, "weights must be non-negative");
  auto dm = distance_matrix(g);
  for (int v = 0; v < g.n; ++v)
    for (int s = 1; s <= dm.ecc[v]; ++s) {
      Rat sum = 0;
      for (int u = 0; u < g.n; ++u)
        if (dm.dist[v][u] <= s) sum += y.weights[u];
      if (sum > s) return {false, v, s};
    }
  return {};
}

std::optional<UniformClosedForm> uniform_closed_form(const Graph& g) {
  if (g.n < 2) fail(Errc::TrivialGraph, "closed form needs n >= 2");
  auto dm = distance_matrix(g);
  UniformClosedForm out;
  bool first = true;
  for (int r = 1; r <= dm.radius; ++r) {
    int size = -1;
    for (int v = 0; v < g.n; ++v) {
      int count = 0;
      for (int u = 0; u < g.n; ++u)
        if (dm.dist[v][u] <= r) ++count;
      if (size < 0) size = count;
      if (count != size) return std::nullopt;  // ball sizes differ: no claim
    }
    Rat w(r, size);
    w.canonicalize();
    if (first || w < out.w_star) {
      out.w_star = w;
      out.r_star = r;
      first = false;
    }
  }
  out.mp_f = Rat(g.n) * out.w_star;
  out.mp_f.canonicalize();
  return out;
}

Rat trivial_lower_bound(const Graph& g) {
  if (g.n < 2) fail(Errc::TrivialGraph, "lower bound needs n >= 2");
  auto dm = distance_matrix(g);
  Rat best;
  bool first = true;
  for (int v = 0; v < g.n; ++v)
    for (int r = 1; r <= dm.ecc[v]; ++r) {
      int count = 0;
      for (int u = 0; u < g.n; ++u)
        if (dm.dist[v][u] <= r) ++count;
      Rat w(r, count);
      w.canonicalize();
      if (first || w < best) {
        best = w;
        first = false;
      }
    }
  Rat out = Rat(g.n) * best;
  out.canonicalize();
  return out;
}

}  // namespace multipack
