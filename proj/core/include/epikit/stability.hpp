#pragma once

#include "epikit/affine.hpp"
#include "epikit/rootsys.hpp"

#include <optional>
#include <vector>

namespace epikit {

/// Support bounds for one orbit representative of a functional: `lower` is
/// guaranteed inside the support, `upper` contains it.
struct SupportProfile {
  std::vector<AffineRoot> lower;
  std::vector<AffineRoot> upper;
};

/// Farkas-style witness for is_cone_trivial, re-verifiable by direct
/// arithmetic. A NontrivialRay is a nonzero gamma pairing <= 0 with every
/// gradient; a PositiveCombination is a relation sum a_s s = 0 with a_s >= 1
/// together with a subset of gradients spanning the rank space.
struct ConeCertificate {
  enum class Kind { NontrivialRay, PositiveCombination };
  Kind kind = Kind::NontrivialRay;
  CoweightVector ray;
  std::vector<Rat> coefficients;
  std::vector<std::size_t> spanning;
};

struct ConeResult {
  bool trivial = false;
  ConeCertificate certificate;
};

/// Whether { gamma : <s, gamma> <= 0 for all s } = { 0 }. Decided twice,
/// by Fourier-Motzkin elimination and by simplex feasibility; the two must
/// agree. The certificate matches the verdict.
ConeResult is_cone_trivial(const RootSystem& sys, const std::vector<Root>& gradients);

bool verify_certificate(const RootSystem& sys, const std::vector<Root>& gradients,
                        bool trivial, const ConeCertificate& cert);

/// Every profile's lower support must span a trivial cone.
bool is_fq_stable(const RootSystem& sys, const std::vector<SupportProfile>& family);

/// Coefficients a_psi >= 0, not all zero, with sum a_psi grad(psi) = 0 (so
/// sum a_psi psi is constant), when such a relation exists. The support of
/// the returned coefficients is the lexicographically smallest feasible one;
/// scaled so the constant is +-1, or sum a_psi = 1 when the constant is 0.
std::optional<std::vector<Rat>> positive_affine_relation(const RootSystem& sys,
                                                         const std::vector<AffineRoot>& roots);

} // namespace epikit
