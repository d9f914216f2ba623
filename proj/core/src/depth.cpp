#include "epikit/depth.hpp"

#include "epikit/errors.hpp"
#include "epikit/lp.hpp"

#include <cassert>

namespace epikit {

namespace {

// min_y max_psi psi(y) with the lexicographically smallest optimal y.
std::pair<Rat, RatVector> profile_depth(const RootSystem& sys,
                                        const std::vector<AffineRoot>& lower) {
  int n = sys.rank();
  // Variables (y, r): minimise r subject to <grad psi, y> - r <= -level.
  LinearProgram lp;
  lp.nvars = n + 1;
  for (const AffineRoot& psi : lower) {
    RatVector row(n + 1);
    for (int i = 0; i < n; ++i) row[i] = psi.gradient.coords[i];
    row[n] = -1;
    lp.ineq_a.push_back(std::move(row));
    lp.ineq_b.push_back(Rat(-psi.level));
  }
  lp.objective.assign(n + 1, Rat(0));
  lp.objective[n] = 1;
  LpSolution first = lp_solve(lp);
  assert(first.status == LpStatus::Optimal);
  Rat r = first.value;

  // Freeze r and minimise the coordinates one at a time.
  LinearProgram fixed;
  fixed.nvars = n;
  for (const AffineRoot& psi : lower) {
    RatVector row(n);
    for (int i = 0; i < n; ++i) row[i] = psi.gradient.coords[i];
    fixed.ineq_a.push_back(std::move(row));
    fixed.ineq_b.push_back(r - psi.level);
  }
  RatVector y(n);
  for (int i = 0; i < n; ++i) {
    fixed.objective.assign(n, Rat(0));
    fixed.objective[i] = 1;
    LpSolution sol = lp_solve(fixed);
    assert(sol.status == LpStatus::Optimal);
    y[i] = sol.value;
    RatVector pin(n, Rat(0));
    pin[i] = 1;
    fixed.eq_a.push_back(std::move(pin));
    fixed.eq_b.push_back(y[i]);
  }
  return {r, y};
}

} // namespace

DepthResult min_depth(const RootSystem& sys, const std::vector<SupportProfile>& family) {
  if (family.empty()) throw InputError("min_depth: empty profile family");
  if (!is_fq_stable(sys, family))
    throw InputError("min_depth: family is not F_q-stable, depth is not certified finite");
  DepthResult best;
  bool have = false;
  for (std::size_t i = 0; i < family.size(); ++i) {
    auto [r, y] = profile_depth(sys, family[i].lower);
    if (!have || r < best.depth) {
      best.depth = r;
      best.witness = BuildingPoint{CoweightVector{y}};
      best.profile_index = i;
      have = true;
    }
  }
  return best;
}

Rat rx(const RootSystem& sys, const BuildingPoint& x) { return delta_x(sys, x).delta; }

} // namespace epikit
