#include "epikit/abelianization.hpp"

#include "epikit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <set>

namespace epikit {

namespace {

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

bool is_power_of(long long q, long long p) {
  if (q < p) return false;
  while (q % p == 0) q /= p;
  return q == 1;
}

std::optional<AffineRoot> affine_sum(const RootSystem& sys, const AffineRoot& a,
                                     const AffineRoot& b, int mult_a = 1) {
  Root g{std::vector<int>(sys.rank(), 0)};
  for (int i = 0; i < sys.rank(); ++i)
    g.coords[i] = mult_a * a.gradient.coords[i] + b.gradient.coords[i];
  if (!sys.is_root(g)) return std::nullopt;
  return AffineRoot{std::move(g), mult_a * a.level + b.level};
}

Root negate(const Root& r) {
  Root out = r;
  for (int& c : out.coords) c = -c;
  return out;
}

AffineRoot make_affine(const RootSystem& sys, std::vector<int> coords, long long level) {
  Root g{std::move(coords)};
  assert(sys.is_root(g));
  (void)sys;
  return AffineRoot{std::move(g), level};
}

VxSpace finish(const RootSystem& sys, long long p, long long q, const BuildingPoint& x,
               std::vector<SxEntry> entries) {
  for (SxEntry& e : entries) std::sort(e.roots.begin(), e.roots.end());
  std::sort(entries.begin(), entries.end());
  for (const SxEntry& e : entries)
    for (const AffineRoot& r : e.roots) {
      Rat v = eval(sys, r, x);
      assert(v > 0 && v < 1);
      (void)v;
    }
  return VxSpace{x, p, q, std::move(entries)};
}

std::vector<SxEntry> singles(const std::vector<AffineRoot>& roots) {
  std::vector<SxEntry> out;
  for (const AffineRoot& r : roots) out.push_back(SxEntry{{r}});
  return out;
}

// The published G2 tables: the alcove barycentre for p = q = 2 and the
// barycentre of the alpha_2 = 0 wall for p = 3.
std::vector<SxEntry> g2_table(const RootSystem& sys, long long p, long long q,
                              const KacCoords& k, const MoyPrasadData& mp) {
  if (k.b == std::vector<long long>{1, 1, 1} && p == 2 && q == 2) {
    std::vector<SxEntry> entries = singles(mp.delta_roots);
    entries.push_back(SxEntry{{make_affine(sys, {1, 1}, 0), make_affine(sys, {2, 1}, 0)}});
    return entries;
  }
  if (k.b == std::vector<long long>{1, 1, 0} && p == 3) {
    std::vector<SxEntry> entries = singles(mp.delta_roots);
    entries.push_back(SxEntry{{make_affine(sys, {3, 1}, 0)}});
    entries.push_back(SxEntry{{make_affine(sys, {3, 2}, 0)}});
    return entries;
  }
  throw UnsupportedError("G2 abelianisation with p in {2,3} is tabulated only for "
                         "the alcove barycentre (p = q = 2) and the alpha_2 = 0 "
                         "wall barycentre (p = 3)");
}

// The p = 2 rewrite algorithm for types other than G2.
std::vector<SxEntry> small_char_algorithm(const RootSystem& sys, long long q,
                                          const BuildingPoint& x, const MoyPrasadData& mp) {
  const std::vector<AffineRoot>& delta = mp.delta_roots;
  std::set<AffineRoot> delta_set(delta.begin(), delta.end());
  std::set<AffineRoot> delta2_set(mp.delta2_roots.begin(), mp.delta2_roots.end());
  auto in_band = [&](const AffineRoot& r) {
    Rat v = eval(sys, r, x);
    return v > 0 && v < 1;
  };

  // Initialise: Delta(x), the root sums psi+theta and the sums 2psi+theta
  // over pairs from Delta(x), kept inside the 0 < value < 1 band.
  std::set<AffineRoot> sx(delta.begin(), delta.end());
  for (const AffineRoot& psi : delta)
    for (const AffineRoot& theta : delta) {
      if (auto s = affine_sum(sys, psi, theta); s && in_band(*s)) sx.insert(*s);
      if (auto s = affine_sum(sys, psi, theta, 2); s && in_band(*s)) sx.insert(*s);
    }

  // Pair phase: for (psi, theta) in Delta(x)^2 with psi+theta a root and
  // psi-theta not one, remove psi+theta when both pairings are -1, and store
  // the identified pair (psi+theta, 2psi+theta) when they are (-1, -2).
  std::vector<std::pair<AffineRoot, AffineRoot>> pairs;
  for (const AffineRoot& psi : delta)
    for (const AffineRoot& theta : delta) {
      Root sum{std::vector<int>(sys.rank(), 0)};
      Root diff = sum;
      for (int i = 0; i < sys.rank(); ++i) {
        sum.coords[i] = psi.gradient.coords[i] + theta.gradient.coords[i];
        diff.coords[i] = psi.gradient.coords[i] - theta.gradient.coords[i];
      }
      if (!sys.is_root(sum) || sys.is_root(diff)) continue;
      long long pt = sys.coroot_pairing(psi.gradient, theta.gradient);
      long long tp = sys.coroot_pairing(theta.gradient, psi.gradient);
      if (pt == -1 && tp == -1) {
        sx.erase(AffineRoot{sum, psi.level + theta.level});
      } else if (pt == -1 && tp == -2) {
        auto first = affine_sum(sys, psi, theta);
        auto second = affine_sum(sys, psi, theta, 2);
        assert(first && second);
        if (in_band(*first) && in_band(*second)) pairs.emplace_back(*first, *second);
      }
    }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  // Delta_2 phase: remove eps+eta when eps in Delta(x), eta in Delta_2(x),
  // eps+eta currently present and eta-eps not in Delta(x).
  {
    std::vector<AffineRoot> removals;
    for (const AffineRoot& eps : delta)
      for (const AffineRoot& eta : mp.delta2_roots) {
        auto s = affine_sum(sys, eps, eta);
        if (!s || !sx.count(*s)) continue;
        AffineRoot diff{negate(eps.gradient), -eps.level};
        auto d = affine_sum(sys, diff, eta);
        if (d && delta_set.count(*d)) continue;
        removals.push_back(*s);
      }
    for (const AffineRoot& r : removals) sx.erase(r);
  }

  // Cascade: a stored pair with a missing member takes both members and
  // itself out; repeat until stable.
  bool changed = true;
  std::vector<bool> pair_alive(pairs.size(), true);
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!pair_alive[i]) continue;
      if (!sx.count(pairs[i].first) || !sx.count(pairs[i].second)) {
        pair_alive[i] = false;
        sx.erase(pairs[i].first);
        sx.erase(pairs[i].second);
        changed = true;
      }
    }
  }

  // Graph phase: connected components of the surviving pairs become tuples.
  std::map<AffineRoot, AffineRoot> parent;
  for (const AffineRoot& r : sx) parent.emplace(r, r);
  auto find = [&](AffineRoot r) {
    while (!(parent.at(r) == r)) r = parent.at(r);
    return r;
  };
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (pair_alive[i]) parent.at(find(pairs[i].first)) = find(pairs[i].second);
  std::map<AffineRoot, std::vector<AffineRoot>> comps;
  for (const AffineRoot& r : sx) comps[find(r)].push_back(r);

  std::vector<SxEntry> entries;
  for (auto& [rep, members] : comps) {
    if (members.size() > 1 && q > 2) continue; // tuples are dropped when q > 2
    entries.push_back(SxEntry{std::move(members)});
  }
  return entries;
}

} // namespace

VxSpace compute_sx(const RootSystem& sys, long long p, long long q, const BuildingPoint& x) {
  if (!is_prime(p)) throw InputError("compute_sx: p must be prime");
  if (!is_power_of(q, p)) throw InputError("compute_sx: q must be a power of p");
  MoyPrasadData mp = delta_x(sys, x);
  if (mp.delta >= 1) return VxSpace{x, p, q, {}}; // hyperspecial: V(x) trivial

  if (sys.family() == Family::G) {
    if (p > 3) return finish(sys, p, q, x, singles(mp.delta_roots));
    return finish(sys, p, q, x, g2_table(sys, p, q, point_to_kac(sys, x), mp));
  }
  if (sys.simply_laced() || p > 2) return finish(sys, p, q, x, singles(mp.delta_roots));
  return finish(sys, p, q, x, small_char_algorithm(sys, q, x, mp));
}

std::vector<AffineRoot> support(const VxSpace& v, const Functional& lambda) {
  if (lambda.values.size() != v.entries.size())
    throw InputError("support: functional does not match the space");
  std::vector<AffineRoot> out;
  for (std::size_t i = 0; i < v.entries.size(); ++i) {
    if (lambda.values[i] == 0) continue;
    for (const AffineRoot& r : v.entries[i].roots) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace epikit
