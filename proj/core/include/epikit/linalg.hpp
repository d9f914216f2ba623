#pragma once

#include "epikit/rational.hpp"

#include <optional>
#include <vector>

namespace epikit {

using RatMatrix = std::vector<std::vector<Rat>>;
using RatVector = std::vector<Rat>;

int matrix_rank(RatMatrix m);

/// One solution of A x = b, if any.
std::optional<RatVector> solve_linear(RatMatrix a, RatVector b);

/// Basis of the nullspace of A.
std::vector<RatVector> nullspace(RatMatrix a);

/// Indices of a maximal linearly independent subset of the given rows,
/// scanning in order (greedy, so the result is deterministic).
std::vector<std::size_t> independent_rows(const RatMatrix& rows);

} // namespace epikit
