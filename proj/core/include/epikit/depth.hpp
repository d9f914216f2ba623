#pragma once

#include "epikit/affine.hpp"
#include "epikit/stability.hpp"

#include <vector>

namespace epikit {

struct DepthResult {
  Rat depth;
  BuildingPoint witness;
  std::size_t profile_index = 0;
};

/// min over profiles P of min_y max_{psi in P.lower} psi(y), as an exact
/// linear program. Requires a stable family (otherwise no finite bound is
/// certified). The witness is the lexicographically smallest optimal y of
/// the first profile attaining the minimum.
DepthResult min_depth(const RootSystem& sys, const std::vector<SupportProfile>& family);

/// r(x): the first Moy-Prasad jump above 0 at a facet barycentre.
Rat rx(const RootSystem& sys, const BuildingPoint& x);

} // namespace epikit
