#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "epikit/chevalley.hpp"
#include "epikit/errors.hpp"
#include "testutil.hpp"

#include <map>

using namespace epikit;
using testutil::ar;
using testutil::rt;

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

long long binom(long long n, long long k) {
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Basis element of the Lie algebra: Cartan generator h_i or root vector e_r.
struct Basis {
  int h = -1; // >= 0 for h_i
  Root r;     // used when h < 0
  bool operator<(const Basis& o) const {
    if (h != o.h) return h < o.h;
    return r < o.r;
  }
};

using Element = std::map<Basis, long long>;

// Bracket of basis elements, from the Chevalley constant table. This is the
// independent oracle for the sign propagation: the table is consistent if
// and only if the Jacobi identity holds everywhere.
Element bracket(const RootSystem& sys, const ChevalleyConstants& chev, const Basis& x,
                const Basis& y) {
  Element out;
  if (x.h >= 0 && y.h >= 0) return out;
  if (x.h >= 0 || y.h >= 0) {
    int i = x.h >= 0 ? x.h : y.h;
    const Root& r = x.h >= 0 ? y.r : x.r;
    long long pair = 0;
    for (int j = 0; j < sys.rank(); ++j) pair += sys.cartan(i, j) * r.coords[j];
    if (pair != 0) out[Basis{-1, r}] = x.h >= 0 ? pair : -pair;
    return out;
  }
  Root sum = add(x.r, y.r);
  bool zero = true;
  for (int c : sum.coords) zero = zero && c == 0;
  if (zero) {
    std::vector<long long> h = sys.coroot_coords(x.r);
    for (int j = 0; j < sys.rank(); ++j)
      if (h[j] != 0) out[Basis{j, Root{}}] = h[j];
    return out;
  }
  if (sys.is_root(sum)) out[Basis{-1, sum}] = chev.n_constant(x.r, y.r);
  return out;
}

Element bracket(const RootSystem& sys, const ChevalleyConstants& chev, const Element& x,
                const Basis& y) {
  Element out;
  for (const auto& [b, c] : x)
    for (const auto& [b2, c2] : bracket(sys, chev, b, y)) out[b2] += c * c2;
  return out;
}

bool jacobi_holds(const RootSystem& sys, const ChevalleyConstants& chev) {
  std::vector<Basis> basis;
  for (int i = 0; i < sys.rank(); ++i) basis.push_back(Basis{i, Root{}});
  for (const Root& r : sys.all_roots()) basis.push_back(Basis{-1, r});
  for (const Basis& x : basis)
    for (const Basis& y : basis)
      for (const Basis& z : basis) {
        Element total;
        for (auto [a, b, c] : {std::array<const Basis*, 3>{&x, &y, &z},
                               std::array<const Basis*, 3>{&y, &z, &x},
                               std::array<const Basis*, 3>{&z, &x, &y}})
          for (const auto& [bb, cc] : bracket(sys, chev, bracket(sys, chev, *a, *b), *c))
            total[bb] += cc;
        for (const auto& [bb, cc] : total)
          if (cc != 0) return false;
      }
  return true;
}

} // namespace

TEST_CASE("the structure-constant table satisfies the Jacobi identity") {
  for (const char* name : {"A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4"}) {
    RootSystem sys = build_root_system(name);
    ChevalleyConstants chev(sys);
    CHECK_MESSAGE(jacobi_holds(sys, chev), name);
  }
}

TEST_CASE("|N_{a,b}| = p + 1 across whole systems") {
  for (const char* name : {"B4", "C4", "G2", "F4", "D5"}) {
    RootSystem sys = build_root_system(name);
    ChevalleyConstants chev(sys);
    for (const Root& a : sys.all_roots())
      for (const Root& b : sys.all_roots()) {
        if (b == a || b == negate(a) || !sys.is_root(add(a, b))) continue;
        long long p = sys.root_string(a, b).first;
        CHECK(std::abs(chev.n_constant(a, b)) == p + 1);
        CHECK(chev.n_constant(a, b) == -chev.n_constant(b, a));
      }
  }
}

TEST_CASE("m_constant magnitudes") {
  RootSystem g2 = build_root_system("G2");
  ChevalleyConstants chev(g2);
  // p = 0, i = 1 gives magnitude 1.
  CHECK(std::abs(chev.m_constant(rt({0, 1}), rt({1, 0}), 1)) == 1);
  // alpha_1-string through alpha_1+alpha_2 has p = 1, so |M(.,.,2)| = C(3,2).
  CHECK(std::abs(chev.m_constant(rt({1, 0}), rt({1, 1}), 2)) == 3);
  CHECK_THROWS_AS(chev.m_constant(rt({1, 0}), rt({1, 0}), 1), InputError);
  CHECK_THROWS_AS(chev.m_constant(rt({0, 1}), rt({1, 0}), 3), InputError);
}

TEST_CASE("commutator constants lie in {1,2,3} exhaustively up to rank 6") {
  static const std::vector<std::pair<int, int>> admissible = {
      {1, 1}, {2, 1}, {3, 1}, {1, 2}, {1, 3}, {3, 2}, {2, 3}};
  for (const char* name :
       {"A1", "A2", "A3", "A4", "A5", "A6", "B2", "B3", "B4", "B5", "B6", "C3", "C4",
        "C5", "C6", "D4", "D5", "D6", "E6", "F4", "G2"}) {
    RootSystem sys = build_root_system(name);
    ChevalleyConstants chev(sys);
    for (const Root& a : sys.all_roots())
      for (const Root& b : sys.all_roots()) {
        if (b == a || b == negate(a)) continue;
        bool b_minus_a_root = sys.is_root(add(b, negate(a)));
        for (auto [i, j] : admissible) {
          Root target{std::vector<int>(sys.rank(), 0)};
          for (int k = 0; k < sys.rank(); ++k)
            target.coords[k] = i * a.coords[k] + j * b.coords[k];
          if (!sys.is_root(target)) continue;
          long long c = chev.c_constant(a, b, i, j);
          CHECK(std::abs(c) >= 1);
          CHECK(std::abs(c) <= 3);
          if (!b_minus_a_root && (i == 1 || j == 1)) {
            // |C_{a,b,i,1}| = |C_{a,b,1,j}| = 1 when b - a is not a root.
            CHECK(std::abs(c) == 1);
          }
        }
      }
  }
}

TEST_CASE("binomial magnitude law on random strings") {
  RootSystem f4 = build_root_system("F4");
  ChevalleyConstants chev(f4);
  for (const Root& a : f4.all_roots())
    for (const Root& b : f4.all_roots()) {
      if (b == a || b == negate(a)) continue;
      auto [p, q] = f4.root_string(a, b);
      for (int i = 1; i <= q; ++i)
        CHECK(std::abs(chev.m_constant(a, b, i)) == binom(p + i, i));
    }
}

TEST_CASE("commutator expansion at the G2 alcove barycentre") {
  RootSystem g2 = build_root_system("G2");
  ChevalleyConstants chev(g2);
  BuildingPoint x = kac_to_point(g2, KacCoords{{1, 1, 1}});
  auto terms = commutator_expansion(chev, ar({1, 0}, 0), ar({0, 1}, 0), x);
  REQUIRE(terms.size() == 4);
  CHECK(terms[0].root == ar({1, 1}, 0));
  CHECK(terms[1].root == ar({2, 1}, 0));
  CHECK(terms[2].root == ar({3, 1}, 0));
  CHECK(terms[3].root == ar({3, 2}, 0));
  // Increasing order in i + j, all values inside (0,1), above both inputs.
  Rat vp = eval(g2, ar({1, 0}, 0), x), vq = eval(g2, ar({0, 1}, 0), x);
  int last = 0;
  for (const CommutatorTerm& t : terms) {
    CHECK(t.i + t.j >= last);
    last = t.i + t.j;
    Rat v = eval(g2, t.root, x);
    CHECK(v > 0);
    CHECK(v < 1);
    CHECK(v > vp);
    CHECK(v > vq);
    CHECK(std::abs(t.coefficient) >= 1);
    CHECK(std::abs(t.coefficient) <= 3);
  }
}

TEST_CASE("commutator expansion at the B5 alcove barycentre") {
  RootSystem b5 = build_root_system("B5");
  ChevalleyConstants chev(b5);
  BuildingPoint x = kac_to_point(b5, KacCoords{{1, 1, 1, 1, 1, 1}});
  auto terms =
      commutator_expansion(chev, ar({0, 0, 0, 1, 0}, 0), ar({0, 0, 0, 0, 1}, 0), x);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].root == ar({0, 0, 0, 1, 1}, 0));
  CHECK(terms[1].root == ar({0, 0, 0, 1, 2}, 0));
}

TEST_CASE("expansion is empty when no i psi + j phi is a root") {
  RootSystem g2 = build_root_system("G2");
  ChevalleyConstants chev(g2);
  BuildingPoint x = kac_to_point(g2, KacCoords{{1, 1, 1}});
  CHECK(commutator_expansion(chev, ar({1, 0}, 0), ar({3, 1}, 0), x).empty());
  CHECK_THROWS_AS(commutator_expansion(chev, ar({1, 0}, 0), ar({-1, 0}, 1), x), InputError);
  CHECK_THROWS_AS(commutator_expansion(chev, ar({1, 0}, 1), ar({0, 1}, 0), x), InputError);
}
