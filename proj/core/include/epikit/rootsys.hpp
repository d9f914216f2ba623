#pragma once

#include "epikit/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epikit {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A root written in the simple-root basis. Coordinates are small integers.
struct Root {
  std::vector<int> coords;
  auto operator<=>(const Root&) const = default;
};

/// A point of coweight space in the fundamental-coweight basis, so that
/// pairing(root, coweight) is the plain dot product of coordinate vectors.
struct CoweightVector {
  std::vector<Rat> coords;
  bool operator==(const CoweightVector&) const = default;
};

/// A finite Weyl element: a reduced-ish word in simple reflections (as found
/// by breadth-first enumeration) plus the integer matrices of its action and
/// its inverse's action on root coordinates.
struct WeylElement {
  std::vector<int> word; // 0-based simple reflection indices
  std::vector<std::vector<long long>> mat;
  std::vector<std::vector<long long>> inv;
  bool operator==(const WeylElement& o) const { return mat == o.mat; }
};

class RootSystem {
 public:
  static RootSystem build(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  std::string name() const;
  bool simply_laced() const;

  const std::vector<Root>& simple_roots() const { return simple_; }
  const std::vector<Root>& all_roots() const { return roots_; }
  const Root& highest_root() const { return highest_; }
  /// marks[0] = 1 for the affine node, marks[i] = coefficient of alpha_i in
  /// the highest root.
  const std::vector<long long>& marks() const { return marks_; }

  bool is_root(const Root& r) const;

  /// cartan(i, j) = <alpha_j, alpha_i^vee>, 0-based.
  long long cartan(int i, int j) const { return cartan_[i][j]; }

  /// Weyl-invariant symmetric form, normalised so short simple roots have
  /// squared length 2.
  long long bilinear(const Root& a, const Root& b) const;

  /// <a, b^vee> = 2 (a,b) / (b,b).
  long long coroot_pairing(const Root& a, const Root& b) const;

  /// The a-string through b: b - p a, ..., b + q a. Requires b != +-a.
  std::pair<int, int> root_string(const Root& a, const Root& b) const;

  /// Sum over coordinates; the bases are dual.
  Rat pairing(const Root& a, const CoweightVector& g) const;

  /// b^vee written in the simple-coroot basis (integer coordinates).
  std::vector<long long> coroot_coords(const Root& b) const;

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;
  WeylElement from_word(const std::vector<int>& word) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;
  Root apply(const WeylElement& w, const Root& r) const;
  CoweightVector apply(const WeylElement& w, const CoweightVector& g) const;

  /// Breadth-first enumeration of the full finite Weyl group. Only sensible
  /// for moderate rank (|W(B5)| = 3840, |W(E6)| = 51840).
  std::vector<WeylElement> weyl_group() const;

 private:
  Family family_;
  int rank_;
  std::vector<std::vector<long long>> cartan_;
  std::vector<long long> sym_; // d_i with (alpha_i, alpha_i) = 2 d_i
  std::vector<Root> simple_;
  std::vector<Root> roots_; // sorted
  Root highest_;
  std::vector<long long> marks_;
};

/// "A1" .. "E8", "F4", "G2" -> (family, rank). Throws InputError.
std::pair<Family, int> parse_type(std::string_view name);

RootSystem build_root_system(Family family, int rank);
RootSystem build_root_system(std::string_view name);

} // namespace epikit
