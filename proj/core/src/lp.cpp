#include "epikit/lp.hpp"

#include "epikit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace epikit {

namespace {

// Dense tableau over the rationals. Rows 0..m-1 hold [A | rhs] with rhs >= 0
// maintained by pivoting; row m is the reduced-cost row.
struct Tableau {
  std::size_t m, n;
  RatMatrix t;          // (m+1) x (n+1)
  std::vector<int> basis; // size m, variable index of each basic row

  void pivot(std::size_t row, std::size_t col) {
    Rat inv = Rat(1) / t[row][col];
    for (std::size_t j = 0; j <= n; ++j) t[row][j] *= inv;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j <= n; ++j) t[i][j] -= f * t[row][j];
    }
    basis[row] = static_cast<int>(col);
  }

  // Returns false when unbounded.
  bool run(std::size_t ncols) {
    while (true) {
      std::size_t enter = ncols;
      for (std::size_t j = 0; j < ncols; ++j)
        if (t[m][j] < 0) { enter = j; break; } // Bland: smallest index
      if (enter == ncols) return true;
      std::size_t leave = m;
      Rat best;
      for (std::size_t i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rat ratio = t[i][n] / t[i][enter];
        if (leave == m || ratio < best ||
            (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m) return false;
      pivot(leave, enter);
    }
  }
};

} // namespace

LpSolution lp_solve(const LinearProgram& lp) {
  std::size_t nfree = static_cast<std::size_t>(lp.nvars);
  std::size_t nineq = lp.ineq_a.size();
  std::size_t neq = lp.eq_a.size();
  std::size_t m = nineq + neq;
  // Columns: u_i, v_i (x = u - v), slacks, artificials.
  std::size_t nreal = 2 * nfree + nineq;
  std::size_t n = nreal + m;

  Tableau tab;
  tab.m = m;
  tab.n = n;
  tab.t.assign(m + 1, RatVector(n + 1, Rat(0)));
  tab.basis.assign(m, -1);

  auto fill_row = [&](std::size_t i, const RatVector& a, const Rat& b) {
    for (std::size_t k = 0; k < nfree; ++k) {
      tab.t[i][2 * k] = a[k];
      tab.t[i][2 * k + 1] = -a[k];
    }
    tab.t[i][n] = b;
  };
  for (std::size_t i = 0; i < nineq; ++i) {
    fill_row(i, lp.ineq_a[i], lp.ineq_b[i]);
    tab.t[i][2 * nfree + i] = 1; // slack
  }
  for (std::size_t i = 0; i < neq; ++i) fill_row(nineq + i, lp.eq_a[i], lp.eq_b[i]);
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.t[i][n] < 0)
      for (std::size_t j = 0; j <= n; ++j) tab.t[i][j] = -tab.t[i][j];
    tab.t[i][nreal + i] = 1; // artificial
    tab.basis[i] = static_cast<int>(nreal + i);
  }

  // Phase 1: minimise the sum of artificials.
  for (std::size_t j = 0; j < m; ++j) tab.t[m][nreal + j] = 1;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) tab.t[m][j] -= tab.t[i][j];
  bool bounded = tab.run(n);
  assert(bounded);
  (void)bounded;
  if (tab.t[m][n] != 0) return {LpStatus::Infeasible, {}, Rat(0)};

  // Drive any artificial still in the basis out, or mark its row redundant.
  for (std::size_t i = 0; i < m; ++i) {
    if (tab.basis[i] < static_cast<int>(nreal)) continue;
    std::size_t col = nreal;
    for (std::size_t j = 0; j < nreal; ++j)
      if (tab.t[i][j] != 0) { col = j; break; }
    if (col < nreal) tab.pivot(i, col);
    // else: the row is 0 = 0 and stays parked on its artificial.
  }

  // Phase 2 over the real columns only.
  for (std::size_t j = 0; j <= n; ++j) tab.t[m][j] = 0;
  for (std::size_t k = 0; k < nfree && k < lp.objective.size(); ++k) {
    tab.t[m][2 * k] = lp.objective[k];
    tab.t[m][2 * k + 1] = -lp.objective[k];
  }
  for (std::size_t i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b >= 0 && tab.t[m][b] != 0) {
      Rat f = tab.t[m][b];
      for (std::size_t j = 0; j <= n; ++j) tab.t[m][j] -= f * tab.t[i][j];
    }
  }
  if (!tab.run(nreal)) return {LpStatus::Unbounded, {}, Rat(0)};

  LpSolution sol;
  sol.status = LpStatus::Optimal;
  sol.x.assign(nfree, Rat(0));
  for (std::size_t i = 0; i < m; ++i) {
    int b = tab.basis[i];
    if (b < 0 || b >= static_cast<int>(2 * nfree)) continue;
    if (b % 2 == 0)
      sol.x[b / 2] += tab.t[i][n];
    else
      sol.x[b / 2] -= tab.t[i][n];
  }
  sol.value = -tab.t[m][n];
  return sol;
}

namespace {

// Scale to an integer vector with content 1 (sign preserved).
void normalise_row(RatVector& row) {
  Int lcm = 1;
  for (const Rat& r : row) lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(r));
  Int gcd = 0;
  std::vector<Int> scaled;
  scaled.reserve(row.size());
  for (const Rat& r : row) {
    Int v = boost::multiprecision::numerator(r) * (lcm / boost::multiprecision::denominator(r));
    gcd = boost::multiprecision::gcd(gcd, v);
    scaled.push_back(std::move(v));
  }
  if (gcd == 0) return;
  for (std::size_t i = 0; i < row.size(); ++i) row[i] = Rat(scaled[i] / gcd);
}

} // namespace

bool fm_feasible(RatMatrix a, RatVector b) {
  std::size_t nvars = a.empty() ? 0 : a[0].size();
  // Work on rows [a | b].
  std::set<RatVector> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    RatVector row = a[i];
    row.push_back(b[i]);
    normalise_row(row);
    rows.insert(std::move(row));
  }
  for (std::size_t k = 0; k < nvars; ++k) {
    std::vector<RatVector> pos, neg;
    std::set<RatVector> rest;
    for (const RatVector& row : rows) {
      if (row[k] > 0) pos.push_back(row);
      else if (row[k] < 0) neg.push_back(row);
      else rest.insert(row);
    }
    for (const RatVector& p : pos)
      for (const RatVector& q : neg) {
        RatVector row(nvars + 1);
        for (std::size_t j = 0; j <= nvars; ++j) row[j] = -q[k] * p[j] + p[k] * q[j];
        normalise_row(row);
        bool zero = true;
        for (std::size_t j = 0; j < nvars; ++j)
          if (row[j] != 0) { zero = false; break; }
        if (zero) {
          if (row[nvars] < 0) return false; // 0 <= negative
          continue;
        }
        rest.insert(std::move(row));
      }
    rows = std::move(rest);
  }
  for (const RatVector& row : rows)
    if (row[nvars] < 0) return false;
  return true;
}

} // namespace epikit
