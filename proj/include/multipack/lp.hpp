#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "multipack/matrix.hpp"

namespace multipack {

// Exact rational scalar; always kept canonical (gcd 1, positive denominator).
using Rat = mpq_class;

std::string rat_to_string(const Rat& r);       // "p/q", denominator always printed
Rat rat_from_string(const std::string& text);  // accepts "p" and "p/q"

struct FractionalWeighting {
  std::vector<Rat> weights;  // per vertex, >= 0

  Rat total() const;
};

enum class LpSense { Cover, Pack };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Optimal;
  Rat optimum;
  std::vector<Rat> primal_solution;  // for the requested sense
  std::vector<Rat> dual_solution;    // the complementary program's solution
  long long pivots = 0;
};

// Exact rational optimum of Cover: min c.x, Ax >= 1, x >= 0 (x per column)
// or Pack: max y.1, yA <= c, y >= 0 (y per row). Both optimal solutions are
// returned and their objectives checked equal.
LpResult solve_lp(const ExtendedMatrix& a, LpSense sense);

std::pair<Rat, FractionalWeighting> fractional_multipacking_number(const Graph& g);

struct FractionalCheck {
  bool valid = true;
  int vertex = -1;  // violating ball centre
  int radius = -1;  // violating ball radius
};

// Checks sum_{u in N_s[v]} y_u <= s for every vertex v and 1 <= s <= ecc(v).
FractionalCheck verify_fractional(const Graph& g, const FractionalWeighting& y);

struct UniformClosedForm {
  Rat w_star;
  int r_star = 0;
  Rat mp_f;
};

// Closed-form optimum n * min_r r/|N_r[v]| when every radius r <= rad has one
// common ball size across vertices; nullopt when sizes differ.
std::optional<UniformClosedForm> uniform_closed_form(const Graph& g);

// |V| * min over all vertices and radii of r/|N_r[v]|; a lower bound for the
// fractional multipacking number.
Rat trivial_lower_bound(const Graph& g);

}  // namespace multipack
