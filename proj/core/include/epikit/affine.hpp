#pragma once

#include "epikit/rootsys.hpp"

#include <compare>
#include <vector>

namespace epikit {

/// The affine function alpha + n on coweight space.
struct AffineRoot {
  Root gradient;
  long long level = 0;
  auto operator<=>(const AffineRoot&) const = default;
};

/// A rational point of the apartment, with the hyperspecial point as origin.
struct BuildingPoint {
  CoweightVector coords;
  bool operator==(const BuildingPoint&) const = default;
};

/// Kac coordinates (b_0, ..., b_n): affine node first, then Bourbaki order.
/// Non-negative, gcd 1; the encoded point has psi_i(x) = b_i / m for the
/// simple affine roots, m = sum marks[i] b[i].
struct KacCoords {
  std::vector<long long> b;
  bool operator==(const KacCoords&) const = default;
};

enum class LatticeMode { SimplyConnected, Adjoint };

/// t_mu v, acting on points as x -> v(x) + mu. The translation lives in the
/// coroot lattice (simply-connected) or the full coweight lattice (adjoint),
/// written in fundamental-coweight coordinates either way.
struct IwahoriWeylElement {
  std::vector<long long> translation;
  WeylElement finite;
  bool operator==(const IwahoriWeylElement& o) const {
    return translation == o.translation && finite == o.finite;
  }
};

/// [1 - alpha_0, alpha_1, ..., alpha_n].
std::vector<AffineRoot> simple_affine_roots(const RootSystem& sys);

Rat eval(const RootSystem& sys, const AffineRoot& psi, const BuildingPoint& x);

long long kac_normalizer(const RootSystem& sys, const KacCoords& k);
KacCoords normalize_kac(const RootSystem& sys, KacCoords k);
BuildingPoint kac_to_point(const RootSystem& sys, const KacCoords& k);
/// Inverse of kac_to_point on the closed fundamental alcove; throws
/// InputError for points outside it.
KacCoords point_to_kac(const RootSystem& sys, const BuildingPoint& x);

bool is_facet_barycentre(const RootSystem& sys, const BuildingPoint& x);

/// First Moy-Prasad jump data at a facet barycentre: the minimal positive
/// value delta, the affine roots attaining it, and those attaining 2*delta.
struct MoyPrasadData {
  Rat delta;
  std::vector<AffineRoot> delta_roots;
  std::vector<AffineRoot> delta2_roots;
};
MoyPrasadData delta_x(const RootSystem& sys, const BuildingPoint& x);

/// All affine roots psi with lo < psi(x) < hi (bounds included unless strict).
std::vector<AffineRoot> psi_x_band(const RootSystem& sys, const BuildingPoint& x,
                                   const Rat& lo, const Rat& hi, bool strict_lo,
                                   bool strict_hi);

IwahoriWeylElement iw_identity(const RootSystem& sys);
IwahoriWeylElement iw_from_finite(const RootSystem& sys, WeylElement w);
IwahoriWeylElement iw_translation(const RootSystem& sys, std::vector<long long> mu);
IwahoriWeylElement iw_compose(const RootSystem& sys, const IwahoriWeylElement& a,
                              const IwahoriWeylElement& b);
IwahoriWeylElement iw_inverse(const RootSystem& sys, const IwahoriWeylElement& w);

AffineRoot act(const RootSystem& sys, const IwahoriWeylElement& w, const AffineRoot& psi);
BuildingPoint act(const RootSystem& sys, const IwahoriWeylElement& w, const BuildingPoint& x);

/// Whether an integer coweight vector lies in the chosen translation lattice.
bool in_translation_lattice(const RootSystem& sys, const std::vector<long long>& mu,
                            LatticeMode mode);

/// Integer coweight action of a finite Weyl element.
std::vector<long long> apply_coweight(const RootSystem& sys, const WeylElement& w,
                                      const std::vector<long long>& g);

/// The nontrivial elements of the Iwahori-Weyl group preserving the
/// fundamental alcove setwise (the Omega subgroup, minus the identity).
std::vector<IwahoriWeylElement> alcove_stabilizer(const RootSystem& sys, LatticeMode mode);

/// Deterministic ordering: translation, then word, then matrix.
bool iw_less(const IwahoriWeylElement& a, const IwahoriWeylElement& b);

} // namespace epikit
