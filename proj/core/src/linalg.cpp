#include "epikit/linalg.hpp"

#include <cassert>

namespace epikit {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelon(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    Rat inv = Rat(1) / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

int matrix_rank(RatMatrix m) { return static_cast<int>(echelon(m).size()); }

std::optional<RatVector> solve_linear(RatMatrix a, RatVector b) {
  std::size_t rows = a.size();
  std::size_t cols = rows ? a[0].size() : 0;
  assert(b.size() == rows);
  for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
  std::vector<std::size_t> pivots = echelon(a);
  // Inconsistent if some pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVector x(cols, Rat(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a[r][cols];
  return x;
}

std::vector<RatVector> nullspace(RatMatrix a) {
  std::size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<std::size_t> pivots = echelon(a);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(cols, Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::size_t> independent_rows(const RatMatrix& rows) {
  std::vector<std::size_t> chosen;
  RatMatrix acc;
  int rank = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    acc.push_back(rows[i]);
    RatMatrix copy = acc;
    int r = matrix_rank(std::move(copy));
    if (r > rank) {
      rank = r;
      chosen.push_back(i);
    } else {
      acc.pop_back();
    }
  }
  return chosen;
}

} // namespace epikit
