#include "epikit/intertwine.hpp"

#include "epikit/errors.hpp"
#include "epikit/lp.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace epikit {

namespace {

unsigned thread_budget() {
  unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("EPIKIT_THREADS")) {
    long v = std::atol(env);
    if (v >= 1 && v < static_cast<long>(hw)) return static_cast<unsigned>(v);
    if (v >= static_cast<long>(hw)) return hw;
  }
  return hw;
}

// Integer points of { nu : <grad psi, nu> >= psi(y) - 1 }, for y = v^(-1) x.
std::vector<std::vector<long long>> polytope_lattice_points(
    const RootSystem& sys, const std::vector<AffineRoot>& support, const BuildingPoint& y,
    LatticeMode mode) {
  int n = sys.rank();
  LinearProgram lp;
  lp.nvars = n;
  for (const AffineRoot& psi : support) {
    RatVector row(n);
    for (int i = 0; i < n; ++i) row[i] = -psi.gradient.coords[i];
    lp.ineq_a.push_back(std::move(row));
    lp.ineq_b.push_back(Rat(1) - eval(sys, psi, y));
  }
  // Coordinate bounding box from 2n exact LPs.
  std::vector<long long> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lp.objective.assign(n, Rat(0));
    lp.objective[i] = 1;
    LpSolution mn = lp_solve(lp);
    if (mn.status == LpStatus::Infeasible) return {};
    assert(mn.status == LpStatus::Optimal);
    lp.objective[i] = -1;
    LpSolution mx = lp_solve(lp);
    assert(mx.status == LpStatus::Optimal);
    lo[i] = static_cast<long long>(rat_ceil(mn.value));
    hi[i] = static_cast<long long>(rat_floor(-mx.value));
    if (lo[i] > hi[i]) return {};
  }

  std::vector<std::vector<long long>> points;
  std::vector<long long> nu = lo;
  while (true) {
    bool inside = true;
    for (std::size_t k = 0; inside && k < support.size(); ++k) {
      Rat lhs = 0;
      for (int i = 0; i < n; ++i) lhs += Rat(support[k].gradient.coords[i]) * nu[i];
      inside = lhs >= eval(sys, support[k], y) - 1;
    }
    if (inside && in_translation_lattice(sys, nu, mode)) points.push_back(nu);
    int i = 0;
    while (i < n) {
      if (++nu[i] <= hi[i]) break;
      nu[i] = lo[i];
      ++i;
    }
    if (i == n) break;
  }
  return points;
}

} // namespace

std::vector<IwahoriWeylElement> enumerate_candidates(const RootSystem& sys,
                                                     const BuildingPoint& x,
                                                     const std::vector<AffineRoot>& support,
                                                     LatticeMode mode) {
  if (support.empty()) throw InputError("enumerate_candidates: empty support");
  std::vector<Root> gradients;
  for (const AffineRoot& psi : support) gradients.push_back(psi.gradient);
  if (!is_cone_trivial(sys, gradients).trivial)
    throw NonCompactError("enumerate_candidates: support cone is not trivial, the "
                          "candidate set is infinite");

  std::vector<WeylElement> group = sys.weyl_group();
  std::vector<std::vector<IwahoriWeylElement>> slots(group.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= group.size()) return;
      const WeylElement& v = group[idx];
      WeylElement vinv = sys.inverse(v);
      BuildingPoint y{sys.apply(vinv, x.coords)};
      for (std::vector<long long>& nu : polytope_lattice_points(sys, support, y, mode)) {
        std::vector<long long> mu = apply_coweight(sys, v, nu);
        slots[idx].push_back(IwahoriWeylElement{std::move(mu), v});
      }
    }
  };
  unsigned nthreads = std::min<std::size_t>(thread_budget(), group.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  std::vector<IwahoriWeylElement> out;
  for (std::vector<IwahoriWeylElement>& s : slots)
    for (IwahoriWeylElement& w : s) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), iw_less);
  return out;
}

namespace {

bool support_condition(const RootSystem& sys, const IwahoriWeylElement& w,
                       const SupportProfile& pb, const SupportProfile& pa,
                       const BuildingPoint& x) {
  std::set<AffineRoot> upper(pa.upper.begin(), pa.upper.end());
  for (const AffineRoot& psi : pb.lower) {
    AffineRoot image = act(sys, w, psi);
    if (eval(sys, image, x) > 0 && !upper.count(image)) return false;
  }
  return true;
}

bool no_common_zero(const RootSystem& sys, const IwahoriWeylElement& w,
                    const SupportProfile& pb, const BuildingPoint& x, const KacCoords& facet) {
  std::vector<AffineRoot> image;
  for (const AffineRoot& psi : pb.lower) {
    AffineRoot t = act(sys, w, psi);
    if (eval(sys, t, x) > 0) image.push_back(std::move(t));
  }
  if (image.empty()) return false; // every point of the facet is a common zero
  // Feasibility over the closed facet: walls with b_i = 0 stay equalities,
  // the others relax to >= 0.
  int n = sys.rank();
  LinearProgram lp;
  lp.nvars = n;
  std::vector<AffineRoot> simples = simple_affine_roots(sys);
  for (std::size_t i = 0; i < simples.size(); ++i) {
    RatVector row(n);
    for (int j = 0; j < n; ++j) row[j] = simples[i].gradient.coords[j];
    if (facet.b[i] == 0) {
      lp.eq_a.push_back(std::move(row));
      lp.eq_b.push_back(Rat(-simples[i].level));
    } else {
      for (Rat& c : row) c = -c;
      lp.ineq_a.push_back(std::move(row));
      lp.ineq_b.push_back(Rat(simples[i].level));
    }
  }
  for (const AffineRoot& theta : image) {
    RatVector row(n);
    for (int j = 0; j < n; ++j) row[j] = theta.gradient.coords[j];
    lp.eq_a.push_back(std::move(row));
    lp.eq_b.push_back(Rat(-theta.level));
  }
  return lp_solve(lp).status == LpStatus::Infeasible;
}

} // namespace

bool filter_support(const RootSystem& sys, const IwahoriWeylElement& w,
                    const std::vector<SupportProfile>& profiles, const BuildingPoint& x) {
  for (const SupportProfile& pb : profiles)
    for (const SupportProfile& pa : profiles)
      if (support_condition(sys, w, pb, pa, x)) return true;
  return false;
}

bool filter_zeros(const RootSystem& sys, const IwahoriWeylElement& w,
                  const std::vector<SupportProfile>& profiles, const BuildingPoint& x,
                  const KacCoords& facet) {
  for (const SupportProfile& pb : profiles)
    if (no_common_zero(sys, w, pb, x, facet)) return true;
  return false;
}

std::vector<IwahoriWeylElement> intertwiners(const RootSystem& sys, const BuildingPoint& x,
                                             const std::vector<SupportProfile>& profiles,
                                             LatticeMode mode) {
  if (!is_fq_stable(sys, profiles))
    throw InputError("intertwiners: profile family is not F_q-stable");
  KacCoords facet = point_to_kac(sys, x);
  std::map<std::pair<std::vector<long long>, std::vector<std::vector<long long>>>,
           IwahoriWeylElement>
      survivors;
  for (const SupportProfile& pb : profiles) {
    for (IwahoriWeylElement& w : enumerate_candidates(sys, x, pb.lower, mode)) {
      auto key = std::make_pair(w.translation, w.finite.mat);
      if (survivors.count(key)) continue;
      bool support_ok = false;
      for (const SupportProfile& pa : profiles)
        if (support_condition(sys, w, pb, pa, x)) { support_ok = true; break; }
      if (!support_ok) continue;
      if (!no_common_zero(sys, w, pb, x, facet)) continue;
      survivors.emplace(std::move(key), std::move(w));
    }
  }
  std::vector<IwahoriWeylElement> out;
  for (auto& [key, w] : survivors) out.push_back(std::move(w));
  std::sort(out.begin(), out.end(), iw_less);
  return out;
}

} // namespace epikit
