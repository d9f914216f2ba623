#include "epikit/affine.hpp"

#include "epikit/errors.hpp"
#include "epikit/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>

namespace epikit {

std::vector<AffineRoot> simple_affine_roots(const RootSystem& sys) {
  std::vector<AffineRoot> out;
  Root neg = sys.highest_root();
  for (int& c : neg.coords) c = -c;
  out.push_back(AffineRoot{neg, 1});
  for (const Root& a : sys.simple_roots()) out.push_back(AffineRoot{a, 0});
  return out;
}

Rat eval(const RootSystem& sys, const AffineRoot& psi, const BuildingPoint& x) {
  return sys.pairing(psi.gradient, x.coords) + psi.level;
}

long long kac_normalizer(const RootSystem& sys, const KacCoords& k) {
  if (static_cast<int>(k.b.size()) != sys.rank() + 1)
    throw InputError("Kac coordinates must have length rank+1");
  long long m = 0;
  for (int i = 0; i <= sys.rank(); ++i) {
    if (k.b[i] < 0) throw InputError("Kac coordinates must be non-negative");
    m += sys.marks()[i] * k.b[i];
  }
  if (m == 0) throw InputError("Kac coordinates must not be all zero");
  return m;
}

KacCoords normalize_kac(const RootSystem& sys, KacCoords k) {
  kac_normalizer(sys, k);
  long long g = 0;
  for (long long v : k.b) g = std::gcd(g, v);
  for (long long& v : k.b) v /= g;
  return k;
}

BuildingPoint kac_to_point(const RootSystem& sys, const KacCoords& k) {
  long long m = kac_normalizer(sys, k);
  BuildingPoint x{CoweightVector{std::vector<Rat>(sys.rank())}};
  for (int i = 0; i < sys.rank(); ++i) x.coords.coords[i] = Rat(k.b[i + 1]) / m;
  return x;
}

KacCoords point_to_kac(const RootSystem& sys, const BuildingPoint& x) {
  std::vector<AffineRoot> simples = simple_affine_roots(sys);
  std::vector<Rat> vals;
  Int lcm = 1;
  for (const AffineRoot& psi : simples) {
    Rat v = eval(sys, psi, x);
    if (v < 0) throw InputError("point lies outside the closed fundamental alcove");
    vals.push_back(v);
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(v));
  }
  KacCoords k;
  Int g = 0;
  std::vector<Int> scaled;
  for (const Rat& v : vals) {
    Int b = boost::multiprecision::numerator(v) * (lcm / boost::multiprecision::denominator(v));
    g = boost::multiprecision::gcd(g, b);
    scaled.push_back(b);
  }
  for (const Int& b : scaled) k.b.push_back(static_cast<long long>(b / g));
  return k;
}

bool is_facet_barycentre(const RootSystem& sys, const BuildingPoint& x) {
  KacCoords k;
  try {
    k = point_to_kac(sys, x);
  } catch (const InputError&) {
    return false;
  }
  return std::all_of(k.b.begin(), k.b.end(), [](long long b) { return b == 0 || b == 1; });
}

MoyPrasadData delta_x(const RootSystem& sys, const BuildingPoint& x) {
  // Facet barycentres are exactly the points with 0/1 Kac coordinates;
  // equivalently every simple affine root takes value in {0, delta} and all
  // affine-root values are multiples of delta.
  if (!is_facet_barycentre(sys, x))
    throw InputError("point is not a facet barycentre of the closed alcove");
  KacCoords k = point_to_kac(sys, x);
  long long m = kac_normalizer(sys, k);
  MoyPrasadData out;
  out.delta = Rat(1) / m;
  out.delta_roots = psi_x_band(sys, x, out.delta, out.delta, false, false);
  out.delta2_roots = psi_x_band(sys, x, 2 * out.delta, 2 * out.delta, false, false);
  return out;
}

std::vector<AffineRoot> psi_x_band(const RootSystem& sys, const BuildingPoint& x,
                                   const Rat& lo, const Rat& hi, bool strict_lo,
                                   bool strict_hi) {
  if (lo > hi) throw InputError("psi_x_band: lo must not exceed hi");
  std::vector<AffineRoot> out;
  for (const Root& a : sys.all_roots()) {
    Rat value = sys.pairing(a, x.coords);
    // Levels n with lo <= value + n <= hi, adjusted for strictness.
    Rat nlo = lo - value, nhi = hi - value;
    Int n0 = rat_ceil(nlo);
    if (strict_lo && Rat(n0) == nlo) ++n0;
    Int n1 = rat_floor(nhi);
    if (strict_hi && Rat(n1) == nhi) --n1;
    for (Int n = n0; n <= n1; ++n)
      out.push_back(AffineRoot{a, static_cast<long long>(n)});
  }
  std::sort(out.begin(), out.end());
  return out;
}

IwahoriWeylElement iw_identity(const RootSystem& sys) {
  return IwahoriWeylElement{std::vector<long long>(sys.rank(), 0), sys.identity()};
}

IwahoriWeylElement iw_from_finite(const RootSystem& sys, WeylElement w) {
  return IwahoriWeylElement{std::vector<long long>(sys.rank(), 0), std::move(w)};
}

IwahoriWeylElement iw_translation(const RootSystem& sys, std::vector<long long> mu) {
  if (static_cast<int>(mu.size()) != sys.rank())
    throw InputError("translation vector has wrong length");
  return IwahoriWeylElement{std::move(mu), sys.identity()};
}

std::vector<long long> apply_coweight(const RootSystem& sys, const WeylElement& w,
                                      const std::vector<long long>& g) {
  std::vector<long long> out(sys.rank(), 0);
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j) out[i] += w.inv[j][i] * g[j];
  return out;
}

IwahoriWeylElement iw_compose(const RootSystem& sys, const IwahoriWeylElement& a,
                              const IwahoriWeylElement& b) {
  // (t_mu u)(t_nu v) = t_{mu + u(nu)} uv
  std::vector<long long> tr = apply_coweight(sys, a.finite, b.translation);
  for (int i = 0; i < sys.rank(); ++i) tr[i] += a.translation[i];
  return IwahoriWeylElement{std::move(tr), sys.compose(a.finite, b.finite)};
}

IwahoriWeylElement iw_inverse(const RootSystem& sys, const IwahoriWeylElement& w) {
  WeylElement vinv = sys.inverse(w.finite);
  std::vector<long long> tr = apply_coweight(sys, vinv, w.translation);
  for (long long& t : tr) t = -t;
  return IwahoriWeylElement{std::move(tr), std::move(vinv)};
}

AffineRoot act(const RootSystem& sys, const IwahoriWeylElement& w, const AffineRoot& psi) {
  Root g = sys.apply(w.finite, psi.gradient);
  long long shift = 0;
  for (int i = 0; i < sys.rank(); ++i) shift += static_cast<long long>(g.coords[i]) * w.translation[i];
  return AffineRoot{std::move(g), psi.level - shift};
}

BuildingPoint act(const RootSystem& sys, const IwahoriWeylElement& w, const BuildingPoint& x) {
  CoweightVector g = sys.apply(w.finite, x.coords);
  for (int i = 0; i < sys.rank(); ++i) g.coords[i] += w.translation[i];
  return BuildingPoint{std::move(g)};
}

bool in_translation_lattice(const RootSystem& sys, const std::vector<long long>& mu,
                            LatticeMode mode) {
  if (static_cast<int>(mu.size()) != sys.rank()) return false;
  if (mode == LatticeMode::Adjoint) return true;
  // Coroot lattice: mu = sum_j a_j alpha_j^vee with integer a_j, where
  // (alpha_j^vee)_i = cartan(j, i) in fundamental-coweight coordinates.
  RatMatrix m(sys.rank(), RatVector(sys.rank()));
  RatVector rhs(sys.rank());
  for (int i = 0; i < sys.rank(); ++i) {
    rhs[i] = mu[i];
    for (int j = 0; j < sys.rank(); ++j) m[i][j] = sys.cartan(j, i);
  }
  auto sol = solve_linear(std::move(m), std::move(rhs));
  if (!sol) return false;
  for (const Rat& a : *sol)
    if (boost::multiprecision::denominator(a) != 1) return false;
  return true;
}

std::vector<IwahoriWeylElement> alcove_stabilizer(const RootSystem& sys, LatticeMode mode) {
  std::vector<AffineRoot> simples = simple_affine_roots(sys);
  int n1 = static_cast<int>(simples.size());
  std::map<Root, int> grad_index;
  for (int i = 0; i < n1; ++i) grad_index.emplace(simples[i].gradient, i);

  std::vector<IwahoriWeylElement> out;
  for (const WeylElement& v : sys.weyl_group()) {
    // The finite part must permute the simple affine gradients.
    std::vector<int> pi(n1, -1);
    bool ok = true;
    for (int i = 0; i < n1 && ok; ++i) {
      auto it = grad_index.find(sys.apply(v, simples[i].gradient));
      if (it == grad_index.end()) ok = false;
      else pi[i] = it->second;
    }
    if (!ok) continue;
    // Levels pin the translation: <g_{pi(i)}, mu> = l_i - l_{pi(i)}.
    RatMatrix m;
    RatVector rhs;
    for (int i = 0; i < n1; ++i) {
      RatVector row(sys.rank());
      for (int j = 0; j < sys.rank(); ++j) row[j] = simples[pi[i]].gradient.coords[j];
      m.push_back(std::move(row));
      rhs.push_back(Rat(simples[i].level - simples[pi[i]].level));
    }
    auto sol = solve_linear(std::move(m), std::move(rhs));
    if (!sol) continue;
    std::vector<long long> mu(sys.rank());
    bool integral = true;
    for (int j = 0; j < sys.rank(); ++j) {
      if (boost::multiprecision::denominator((*sol)[j]) != 1) { integral = false; break; }
      mu[j] = static_cast<long long>(boost::multiprecision::numerator((*sol)[j]));
    }
    if (!integral || !in_translation_lattice(sys, mu, mode)) continue;
    IwahoriWeylElement w{std::move(mu), v};
    if (w == iw_identity(sys)) continue;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), iw_less);
  return out;
}

bool iw_less(const IwahoriWeylElement& a, const IwahoriWeylElement& b) {
  if (a.translation != b.translation) return a.translation < b.translation;
  if (a.finite.word != b.finite.word) return a.finite.word < b.finite.word;
  return a.finite.mat < b.finite.mat;
}

} // namespace epikit
