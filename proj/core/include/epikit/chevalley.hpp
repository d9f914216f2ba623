#pragma once

#include "epikit/affine.hpp"
#include "epikit/rootsys.hpp"

#include <map>
#include <vector>

namespace epikit {

/// One factor of the commutator expansion: the affine root i*psi + j*phi
/// with its constant C_{psi,phi,i,j}; the symbolic argument is
/// coefficient * (-r)^i s^j.
struct CommutatorTerm {
  int i = 0;
  int j = 0;
  AffineRoot root;
  long long coefficient = 0;
};

/// Structure constants N_{a,b} of a Chevalley basis, with signs fixed by
/// extraspecial pairs for the lexicographic order on positive-root
/// coordinates. Magnitudes satisfy |N_{a,b}| = p+1 where the a-string
/// through b is b - p a, ..., b + q a.
class ChevalleyConstants {
 public:
  explicit ChevalleyConstants(const RootSystem& sys);

  const RootSystem& system() const { return *sys_; }

  /// N_{a,b} for roots a, b with a+b a root.
  long long n_constant(const Root& a, const Root& b) const;

  /// M_{a,b,i} = (1/i!) N_{a,b} N_{a,a+b} ... N_{a,(i-1)a+b}; |M| = C(p+i, i).
  long long m_constant(const Root& a, const Root& b, int i) const;

  /// C_{a,b,i,j} for admissible (i,j), via the four M-formulas. Always in
  /// {+-1, +-2, +-3}.
  long long c_constant(const Root& a, const Root& b, int i, int j) const;

 private:
  const RootSystem* sys_;
  std::map<std::pair<Root, Root>, long long> special_; // a < b, both positive
};

/// Terms i*psi + j*phi of Chevalley's commutator formula for affine roots
/// that land in the band 0 < value(x) < 1, in increasing order of i+j.
/// Requires 0 < psi(x), phi(x) < 1 and psi+phi non-constant.
std::vector<CommutatorTerm> commutator_expansion(const ChevalleyConstants& chev,
                                                 const AffineRoot& psi, const AffineRoot& phi,
                                                 const BuildingPoint& x);

} // namespace epikit
