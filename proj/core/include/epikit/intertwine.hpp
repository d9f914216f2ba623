#pragma once

#include "epikit/affine.hpp"
#include "epikit/stability.hpp"

#include <vector>

namespace epikit {

/// Every w = t_mu v with psi(w^(-1) x) <= 1 for all psi in the support: the
/// character is trivial past level 1, so anything outside this finite set
/// cannot intertwine. Throws NonCompactError unless the support gradients
/// span a trivial cone. Enumeration runs over the finite Weyl group and the
/// lattice points of a per-element polytope; EPIKIT_THREADS caps the worker
/// count.
std::vector<IwahoriWeylElement> enumerate_candidates(const RootSystem& sys,
                                                     const BuildingPoint& x,
                                                     const std::vector<AffineRoot>& support,
                                                     LatticeMode mode);

/// Necessary condition from the support lemma: some pair of profiles
/// (P_b, P_a) has act(w, psi) in P_a.upper for every psi in P_b.lower whose
/// image is positive at x.
bool filter_support(const RootSystem& sys, const IwahoriWeylElement& w,
                    const std::vector<SupportProfile>& profiles, const BuildingPoint& x);

/// Necessary condition from the common-zero lemma: for some profile P_b, the
/// image roots act(w, P_b.lower) that are positive at x admit no common zero
/// on the closed facet with the given Kac coordinates.
bool filter_zeros(const RootSystem& sys, const IwahoriWeylElement& w,
                  const std::vector<SupportProfile>& profiles, const BuildingPoint& x,
                  const KacCoords& facet);

/// Candidates surviving both filters, applied jointly per profile P_b, with
/// duplicates removed. These are necessary-condition survivors; the paper's
/// examples pin them exactly where sharpness is proved.
std::vector<IwahoriWeylElement> intertwiners(const RootSystem& sys, const BuildingPoint& x,
                                             const std::vector<SupportProfile>& profiles,
                                             LatticeMode mode);

} // namespace epikit
