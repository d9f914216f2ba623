#include "epikit/stability.hpp"

#include "epikit/errors.hpp"
#include "epikit/linalg.hpp"
#include "epikit/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace epikit {

namespace {

RatMatrix gradient_rows(const std::vector<Root>& gradients) {
  RatMatrix rows;
  for (const Root& g : gradients) {
    RatVector row;
    for (int c : g.coords) row.emplace_back(c);
    rows.push_back(std::move(row));
  }
  return rows;
}

// Search, in a fixed order, for a nonzero gamma with <s, gamma> <= 0 for all
// s: scale-invariance lets us pin sign * gamma_j = 1.
std::optional<RatVector> find_ray_simplex(int rank, const RatMatrix& rows) {
  for (int j = 0; j < rank; ++j) {
    for (int sign : {+1, -1}) {
      LinearProgram lp;
      lp.nvars = rank;
      lp.ineq_a = rows;
      lp.ineq_b.assign(rows.size(), Rat(0));
      RatVector pin(rank, Rat(0));
      pin[j] = sign;
      lp.eq_a.push_back(std::move(pin));
      lp.eq_b.push_back(Rat(1));
      LpSolution sol = lp_solve(lp);
      if (sol.status == LpStatus::Optimal) return sol.x;
    }
  }
  return std::nullopt;
}

bool ray_exists_fm(int rank, const RatMatrix& rows) {
  for (int j = 0; j < rank; ++j) {
    for (int sign : {+1, -1}) {
      RatMatrix a = rows;
      RatVector b(rows.size(), Rat(0));
      RatVector pin(rank, Rat(0));
      pin[j] = -sign; // sign * gamma_j >= 1
      a.push_back(std::move(pin));
      b.push_back(Rat(-1));
      if (fm_feasible(std::move(a), std::move(b))) return true;
    }
  }
  return false;
}

} // namespace

ConeResult is_cone_trivial(const RootSystem& sys, const std::vector<Root>& gradients) {
  if (gradients.empty()) throw InputError("is_cone_trivial: empty gradient set");
  int rank = sys.rank();
  RatMatrix rows = gradient_rows(gradients);

  bool fm_ray = ray_exists_fm(rank, rows);
  std::optional<RatVector> ray = find_ray_simplex(rank, rows);
  if (fm_ray != ray.has_value())
    throw std::logic_error("cone deciders disagree (Fourier-Motzkin vs simplex)");

  ConeResult out;
  if (ray) {
    out.trivial = false;
    out.certificate.kind = ConeCertificate::Kind::NontrivialRay;
    out.certificate.ray = CoweightVector{std::move(*ray)};
    return out;
  }
  out.trivial = true;
  out.certificate.kind = ConeCertificate::Kind::PositiveCombination;
  // A relation sum a_s s = 0 with every a_s >= 1 exists exactly when the
  // gradients positively span the whole space.
  LinearProgram lp;
  lp.nvars = static_cast<int>(gradients.size());
  for (int i = 0; i < rank; ++i) {
    RatVector row(gradients.size());
    for (std::size_t s = 0; s < gradients.size(); ++s) row[s] = gradients[s].coords[i];
    lp.eq_a.push_back(std::move(row));
    lp.eq_b.push_back(Rat(0));
  }
  for (std::size_t s = 0; s < gradients.size(); ++s) {
    RatVector row(gradients.size(), Rat(0));
    row[s] = -1;
    lp.ineq_a.push_back(std::move(row));
    lp.ineq_b.push_back(Rat(-1));
  }
  LpSolution sol = lp_solve(lp);
  assert(sol.status == LpStatus::Optimal);
  out.certificate.coefficients = sol.x;
  out.certificate.spanning = independent_rows(rows);
  assert(static_cast<int>(out.certificate.spanning.size()) == rank);
  return out;
}

bool verify_certificate(const RootSystem& sys, const std::vector<Root>& gradients,
                        bool trivial, const ConeCertificate& cert) {
  int rank = sys.rank();
  if (!trivial) {
    if (cert.kind != ConeCertificate::Kind::NontrivialRay) return false;
    if (static_cast<int>(cert.ray.coords.size()) != rank) return false;
    bool nonzero = false;
    for (const Rat& c : cert.ray.coords) nonzero = nonzero || c != 0;
    if (!nonzero) return false;
    for (const Root& g : gradients)
      if (sys.pairing(g, cert.ray) > 0) return false;
    return true;
  }
  if (cert.kind != ConeCertificate::Kind::PositiveCombination) return false;
  if (cert.coefficients.size() != gradients.size()) return false;
  bool nonzero = false;
  for (const Rat& a : cert.coefficients) {
    if (a < 0) return false;
    nonzero = nonzero || a != 0;
  }
  if (!nonzero) return false;
  for (int i = 0; i < rank; ++i) {
    Rat s = 0;
    for (std::size_t k = 0; k < gradients.size(); ++k)
      s += cert.coefficients[k] * gradients[k].coords[i];
    if (s != 0) return false;
  }
  RatMatrix span_rows;
  for (std::size_t idx : cert.spanning) {
    if (idx >= gradients.size()) return false;
    if (cert.coefficients[idx] <= 0) return false;
    RatVector row;
    for (int c : gradients[idx].coords) row.emplace_back(c);
    span_rows.push_back(std::move(row));
  }
  return matrix_rank(std::move(span_rows)) == rank;
}

bool is_fq_stable(const RootSystem& sys, const std::vector<SupportProfile>& family) {
  if (family.empty()) throw InputError("is_fq_stable: empty profile family");
  for (const SupportProfile& p : family) {
    if (p.lower.empty()) throw InputError("is_fq_stable: profile with empty lower support");
    std::vector<Root> gradients;
    for (const AffineRoot& psi : p.lower) gradients.push_back(psi.gradient);
    if (!is_cone_trivial(sys, gradients).trivial) return false;
  }
  return true;
}

namespace {

// Feasibility of a relation sum a g = 0 with a_i >= 1 on `ones`, a_i = 0 on
// `zeros`, a_i >= 0 elsewhere.
bool relation_feasible(const RootSystem& sys, const std::vector<AffineRoot>& roots,
                       const std::vector<bool>& ones, const std::vector<bool>& zeros,
                       RatVector* solution = nullptr) {
  std::size_t k = roots.size();
  LinearProgram lp;
  lp.nvars = static_cast<int>(k);
  for (int i = 0; i < sys.rank(); ++i) {
    RatVector row(k);
    for (std::size_t s = 0; s < k; ++s) row[s] = roots[s].gradient.coords[i];
    lp.eq_a.push_back(std::move(row));
    lp.eq_b.push_back(Rat(0));
  }
  for (std::size_t s = 0; s < k; ++s) {
    RatVector row(k, Rat(0));
    if (zeros[s]) {
      row[s] = 1;
      lp.eq_a.push_back(std::move(row));
      lp.eq_b.push_back(Rat(0));
    } else {
      row[s] = -1;
      lp.ineq_a.push_back(std::move(row));
      lp.ineq_b.push_back(ones[s] ? Rat(-1) : Rat(0));
    }
  }
  LpSolution sol = lp_solve(lp);
  if (sol.status != LpStatus::Optimal) return false;
  if (solution) *solution = sol.x;
  return true;
}

} // namespace

std::optional<std::vector<Rat>> positive_affine_relation(const RootSystem& sys,
                                                         const std::vector<AffineRoot>& roots) {
  if (roots.empty()) throw InputError("positive_affine_relation: empty root set");
  std::size_t k = roots.size();
  std::vector<bool> none(k, false);

  // Any relation at all? (not-all-zero via sum = 1 is equivalent to some
  // coefficient >= 1 after scaling; try the cheap existence probe first)
  {
    bool any = false;
    for (std::size_t i = 0; i < k && !any; ++i) {
      std::vector<bool> ones(k, false);
      ones[i] = true;
      any = relation_feasible(sys, roots, ones, none);
    }
    if (!any) return std::nullopt;
  }

  // Lexicographically smallest feasible support, built greedily: prefer
  // closing the support over extending it, and smaller indices first.
  std::vector<bool> in_support(k, false);
  std::size_t start = 0;
  while (true) {
    bool have_any = false;
    for (std::size_t i = 0; i < k; ++i) have_any = have_any || in_support[i];
    if (have_any) {
      std::vector<bool> zeros(k);
      for (std::size_t i = 0; i < k; ++i) zeros[i] = !in_support[i];
      if (relation_feasible(sys, roots, in_support, zeros)) break;
    }
    bool extended = false;
    for (std::size_t i = start; i < k; ++i) {
      if (in_support[i]) continue;
      std::vector<bool> ones = in_support;
      ones[i] = true;
      std::vector<bool> zeros(k, false);
      for (std::size_t j = 0; j < i; ++j) zeros[j] = !ones[j];
      if (relation_feasible(sys, roots, ones, zeros)) {
        in_support[i] = true;
        start = i + 1;
        extended = true;
        break;
      }
    }
    assert(extended);
    (void)extended;
  }

  std::vector<bool> zeros(k);
  for (std::size_t i = 0; i < k; ++i) zeros[i] = !in_support[i];
  RatVector a;
  bool ok = relation_feasible(sys, roots, in_support, zeros, &a);
  assert(ok);
  (void)ok;

  Rat constant = 0;
  for (std::size_t i = 0; i < k; ++i) constant += a[i] * roots[i].level;
  Rat scale;
  if (constant != 0) {
    scale = Rat(1) / boost::multiprecision::abs(constant);
  } else {
    Rat total = 0;
    for (const Rat& c : a) total += c;
    scale = Rat(1) / total;
  }
  for (Rat& c : a) c *= scale;
  return std::vector<Rat>(a.begin(), a.end());
}

} // namespace epikit
