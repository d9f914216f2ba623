#include "epikit/chevalley.hpp"

#include "epikit/errors.hpp"

#include <algorithm>
#include <cassert>

namespace epikit {

namespace {

Root negate(const Root& r) {
  Root out = r;
  for (int& c : out.coords) c = -c;
  return out;
}

Root add(const Root& a, const Root& b) {
  Root out = a;
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Root sub(const Root& a, const Root& b) { return add(a, negate(b)); }

bool positive(const Root& r) {
  for (int c : r.coords) {
    if (c > 0) return true;
    if (c < 0) return false;
  }
  return false;
}

long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long exact_div(long long num, long long den) {
  assert(den != 0 && num % den == 0);
  return num / den;
}

} // namespace

ChevalleyConstants::ChevalleyConstants(const RootSystem& sys) : sys_(&sys) {
  std::vector<Root> positives;
  for (const Root& r : sys.all_roots())
    if (positive(r)) positives.push_back(r);
  // all_roots is sorted, so positives is in lexicographic order; sums follow
  // their parts in this order, which grounds the induction below.
  for (const Root& gamma : positives) {
    std::vector<std::pair<Root, Root>> special;
    for (const Root& a : positives) {
      if (!(a < gamma)) break;
      Root b = sub(gamma, a);
      if (a < b && sys.is_root(b)) special.emplace_back(a, b);
    }
    if (special.empty()) continue;
    const auto& extra = special.front(); // minimal first component
    for (const auto& [a, b] : special) {
      long long p = sys.root_string(a, b).first;
      long long value;
      if (a == extra.first) {
        value = p + 1;
      } else {
        // Jacobi identity against the extraspecial pair (xi, eta):
        //   N_{xi,eta} N_{gamma,-a} + N_{eta,-a} N_{eta-a,xi}
        //                           + N_{-a,xi} N_{xi-a,eta} = 0,
        // with N_{gamma,-a} = -(b,b)/(gamma,gamma) N_{a,b}.
        const Root& xi = extra.first;
        const Root& eta = extra.second;
        long long t = 0;
        Root eta_a = sub(eta, a);
        if (sys.is_root(eta_a)) t += n_constant(eta, negate(a)) * n_constant(eta_a, xi);
        Root xi_a = sub(xi, a);
        if (sys.is_root(xi_a)) t += n_constant(negate(a), xi) * n_constant(xi_a, eta);
        long long gg = sys.bilinear(gamma, gamma);
        long long bb = sys.bilinear(b, b);
        long long n_extra = special_.at(extra);
        value = exact_div(gg * t, bb * n_extra);
        assert(std::abs(value) == p + 1);
      }
      special_.emplace(std::make_pair(a, b), value);
    }
  }
}

long long ChevalleyConstants::n_constant(const Root& a, const Root& b) const {
  const RootSystem& sys = *sys_;
  Root sum = add(a, b);
  if (!sys.is_root(a) || !sys.is_root(b) || !sys.is_root(sum))
    throw InputError("n_constant: a, b and a+b must all be roots");
  bool pa = positive(a), pb = positive(b);
  if (pa && pb) {
    if (a < b) return special_.at({a, b});
    return -special_.at({b, a});
  }
  if (!pa && !pb) return -n_constant(negate(a), negate(b));
  if (!pa) return -n_constant(b, a); // reduce to a > 0, b < 0
  // a > 0, b < 0. Use the cyclic rule for a + b + c = 0, c = -(a+b):
  //   N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b).
  Root c = negate(sum);
  long long cc = sys.bilinear(c, c);
  if (positive(sum)) {
    // c < 0: N_{b,c} = -N_{-b,-c}, an all-positive pair with sum a.
    long long nbc = -n_constant(negate(b), sum);
    return exact_div(cc * nbc, sys.bilinear(a, a));
  }
  // c > 0: N_{c,a} is an all-positive pair with sum -b.
  long long nca = n_constant(c, a);
  return exact_div(cc * nca, sys.bilinear(b, b));
}

long long ChevalleyConstants::m_constant(const Root& a, const Root& b, int i) const {
  const RootSystem& sys = *sys_;
  if (i < 1) throw InputError("m_constant: i must be positive");
  if (!sys.is_root(a) || !sys.is_root(b) || b == a || b == negate(a))
    throw InputError("m_constant: a, b must be linearly independent roots");
  Root target = b;
  for (int k = 0; k < i; ++k) target = add(target, a);
  if (!sys.is_root(target)) throw InputError("m_constant: b + i a is not a root");
  long long prod = 1;
  long long fact = 1;
  Root cur = b;
  for (int k = 0; k < i; ++k) {
    prod *= n_constant(a, cur);
    fact *= k + 1;
    cur = add(cur, a);
  }
  long long m = exact_div(prod, fact);
  long long p = sys.root_string(a, b).first;
  assert(std::abs(m) == binom(p + i, i));
  return m;
}

long long ChevalleyConstants::c_constant(const Root& a, const Root& b, int i, int j) const {
  const RootSystem& sys = *sys_;
  static const std::vector<std::pair<int, int>> admissible = {
      {1, 1}, {2, 1}, {3, 1}, {1, 2}, {1, 3}, {3, 2}, {2, 3}};
  if (std::find(admissible.begin(), admissible.end(), std::make_pair(i, j)) == admissible.end())
    throw InputError("c_constant: inadmissible (i, j)");
  Root target{std::vector<int>(sys.rank(), 0)};
  for (int k = 0; k < sys.rank(); ++k) target.coords[k] = i * a.coords[k] + j * b.coords[k];
  if (!sys.is_root(target)) throw InputError("c_constant: i a + j b is not a root");
  long long c;
  if (j == 1) {
    c = m_constant(a, b, i);
  } else if (i == 1) {
    c = (j % 2 == 0 ? 1 : -1) * m_constant(b, a, j);
  } else if (i == 3 && j == 2) {
    c = exact_div(m_constant(add(a, b), a, 2), 3);
  } else { // (2, 3)
    c = exact_div(-2 * m_constant(add(a, b), b, 2), 3);
  }
  assert(std::abs(c) >= 1 && std::abs(c) <= 3);
  return c;
}

std::vector<CommutatorTerm> commutator_expansion(const ChevalleyConstants& chev,
                                                 const AffineRoot& psi, const AffineRoot& phi,
                                                 const BuildingPoint& x) {
  const RootSystem& sys = chev.system();
  Rat vp = eval(sys, psi, x), vq = eval(sys, phi, x);
  if (vp <= 0 || vp >= 1 || vq <= 0 || vq >= 1)
    throw InputError("commutator_expansion: arguments must take values in (0,1) at x");
  if (psi.gradient == negate(phi.gradient))
    throw InputError("commutator_expansion: psi + phi must be non-constant");
  static const std::vector<std::pair<int, int>> order = {
      {1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}};
  std::vector<CommutatorTerm> out;
  for (auto [i, j] : order) {
    Root g{std::vector<int>(sys.rank(), 0)};
    for (int k = 0; k < sys.rank(); ++k)
      g.coords[k] = i * psi.gradient.coords[k] + j * phi.gradient.coords[k];
    if (!sys.is_root(g)) continue;
    Rat value = i * vp + j * vq;
    if (value >= 1) continue;
    AffineRoot term{g, i * psi.level + j * phi.level};
    out.push_back(CommutatorTerm{i, j, std::move(term),
                                 chev.c_constant(psi.gradient, phi.gradient, i, j)});
  }
  return out;
}

} // namespace epikit
