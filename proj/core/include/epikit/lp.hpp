#pragma once

#include "epikit/linalg.hpp"
#include "epikit/rational.hpp"

#include <vector>

namespace epikit {

/// minimize objective . x  subject to  ineq_a x <= ineq_b,  eq_a x = eq_b,
/// with x free. An empty objective solves the feasibility problem.
struct LinearProgram {
  int nvars = 0;
  RatMatrix ineq_a;
  RatVector ineq_b;
  RatMatrix eq_a;
  RatVector eq_b;
  RatVector objective;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  RatVector x;
  Rat value;
};

/// Exact primal simplex, Bland's rule throughout (no cycling).
LpSolution lp_solve(const LinearProgram& lp);

/// Fourier-Motzkin elimination: is { x : a x <= b } nonempty?
bool fm_feasible(RatMatrix a, RatVector b);

} // namespace epikit
