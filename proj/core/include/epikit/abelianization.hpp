#pragma once

#include "epikit/affine.hpp"
#include "epikit/rootsys.hpp"

#include <compare>
#include <vector>

namespace epikit {

/// One line of V(x): a single affine root, or a tuple of affine roots whose
/// root-group images are identified. Roots are kept sorted.
struct SxEntry {
  std::vector<AffineRoot> roots;
  bool is_tuple() const { return roots.size() > 1; }
  auto operator<=>(const SxEntry&) const = default;
};

/// The F_q-vector space V(x): one line per entry of S(x).
struct VxSpace {
  BuildingPoint x;
  long long p = 0;
  long long q = 0;
  std::vector<SxEntry> entries; // sorted
  std::size_t dim() const { return entries.size(); }
};

/// S(x) and V(x) for a facet barycentre x:
///  - simply laced, or types B/C/F with p > 2, or G2 with p > 3: Delta(x);
///  - p = 2, not G2: the four-phase rewrite algorithm;
///  - G2 with p in {2, 3}: published tables (two points), else Unsupported.
/// Hyperspecial points give the empty space.
VxSpace compute_sx(const RootSystem& sys, long long p, long long q, const BuildingPoint& x);

/// Values on the lines of V(x), by index into entries; only zero/nonzero is
/// ever consumed downstream.
struct Functional {
  std::vector<unsigned long long> values;
};

/// Union of the roots of the entries where the functional is nonzero; a
/// nonzero tuple line contributes all of its member roots.
std::vector<AffineRoot> support(const VxSpace& v, const Functional& lambda);

} // namespace epikit
