#include "epikit/rootsys.hpp"

#include "epikit/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>

namespace epikit {

namespace {

std::vector<std::vector<long long>> cartan_matrix(Family f, int n) {
  std::vector<std::vector<long long>> c(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = -1, c[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2; // <alpha_{n-1}, alpha_n^vee>, alpha_n short
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2; // <alpha_n, alpha_{n-1}^vee>, alpha_n long
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case Family::E:
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case Family::F:
      bond(0, 1);
      bond(2, 3);
      c[1][2] = -1; // <alpha_3, alpha_2^vee>
      c[2][1] = -2; // <alpha_2, alpha_3^vee>, alpha_3 short
      break;
    case Family::G:
      c[0][1] = -3; // <alpha_2, alpha_1^vee>, alpha_1 short
      c[1][0] = -1;
      break;
  }
  return c;
}

std::vector<long long> symmetrizer(Family f, int n) {
  std::vector<long long> d(n, 1);
  switch (f) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;
      break;
    case Family::C:
      d[n - 1] = 2;
      break;
    case Family::F:
      d[0] = d[1] = 2;
      break;
    case Family::G:
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

void validate_type(Family f, int n) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = n >= 1; break;
    case Family::B: ok = n >= 2; break;
    case Family::C: ok = n >= 2; break;
    case Family::D: ok = n >= 4; break;
    case Family::E: ok = n >= 6 && n <= 8; break;
    case Family::F: ok = n == 4; break;
    case Family::G: ok = n == 2; break;
  }
  if (!ok)
    throw InputError("invalid root system type " + std::string(1, static_cast<char>(f)) +
                     std::to_string(n));
}

} // namespace

RootSystem RootSystem::build(Family family, int rank) {
  validate_type(family, rank);
  RootSystem sys;
  sys.family_ = family;
  sys.rank_ = rank;
  sys.cartan_ = cartan_matrix(family, rank);
  sys.sym_ = symmetrizer(family, rank);

  for (int i = 0; i < rank; ++i) {
    Root r{std::vector<int>(rank, 0)};
    r.coords[i] = 1;
    sys.simple_.push_back(std::move(r));
  }

  // Close the simple roots under simple reflections.
  std::vector<Root> frontier = sys.simple_;
  std::vector<Root> all = sys.simple_;
  std::sort(all.begin(), all.end());
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& r : frontier) {
      for (int i = 0; i < rank; ++i) {
        long long pair = 0;
        for (int j = 0; j < rank; ++j) pair += sys.cartan_[i][j] * r.coords[j];
        Root image = r;
        image.coords[i] -= static_cast<int>(pair);
        if (!std::binary_search(all.begin(), all.end(), image)) {
          all.insert(std::upper_bound(all.begin(), all.end(), image), image);
          next.push_back(std::move(image));
        }
      }
    }
    frontier = std::move(next);
  }
  sys.roots_ = std::move(all);

  int best_height = 0;
  for (const Root& r : sys.roots_) {
    int h = std::accumulate(r.coords.begin(), r.coords.end(), 0);
    if (h > best_height) {
      best_height = h;
      sys.highest_ = r;
    }
  }
  sys.marks_.assign(rank + 1, 1);
  for (int i = 0; i < rank; ++i) sys.marks_[i + 1] = sys.highest_.coords[i];
  return sys;
}

std::string RootSystem::name() const {
  return std::string(1, static_cast<char>(family_)) + std::to_string(rank_);
}

bool RootSystem::simply_laced() const {
  return family_ == Family::A || family_ == Family::D || family_ == Family::E;
}

bool RootSystem::is_root(const Root& r) const {
  if (static_cast<int>(r.coords.size()) != rank_) return false;
  return std::binary_search(roots_.begin(), roots_.end(), r);
}

long long RootSystem::bilinear(const Root& a, const Root& b) const {
  // (alpha_i, alpha_j) = d_j <alpha_i, alpha_j^vee>
  long long s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a.coords[i] == 0) continue;
    for (int j = 0; j < rank_; ++j)
      s += static_cast<long long>(a.coords[i]) * b.coords[j] * sym_[j] * cartan_[j][i];
  }
  return s;
}

long long RootSystem::coroot_pairing(const Root& a, const Root& b) const {
  long long ab = bilinear(a, b);
  long long bb = bilinear(b, b);
  assert(bb > 0 && (2 * ab) % bb == 0);
  return 2 * ab / bb;
}

std::pair<int, int> RootSystem::root_string(const Root& a, const Root& b) const {
  if (!is_root(a) || !is_root(b)) throw InputError("root_string: arguments must be roots");
  Root neg = a;
  for (int& c : neg.coords) c = -c;
  if (b == a || b == neg) throw InputError("root_string: b must differ from +-a");
  auto shift = [&](int dir) {
    Root r = b;
    int k = 0;
    while (true) {
      for (int i = 0; i < rank_; ++i) r.coords[i] += dir * a.coords[i];
      if (!is_root(r)) break;
      ++k;
    }
    return k;
  };
  return {shift(-1), shift(+1)};
}

Rat RootSystem::pairing(const Root& a, const CoweightVector& g) const {
  if (static_cast<int>(g.coords.size()) != rank_ ||
      static_cast<int>(a.coords.size()) != rank_)
    throw InputError("pairing: rank mismatch");
  Rat s = 0;
  for (int i = 0; i < rank_; ++i) s += a.coords[i] * g.coords[i];
  return s;
}

std::vector<long long> RootSystem::coroot_coords(const Root& b) const {
  long long db = bilinear(b, b) / 2;
  std::vector<long long> out(rank_);
  for (int j = 0; j < rank_; ++j) {
    long long num = static_cast<long long>(b.coords[j]) * sym_[j];
    assert(num % db == 0);
    out[j] = num / db;
  }
  return out;
}

WeylElement RootSystem::identity() const {
  WeylElement w;
  w.mat.assign(rank_, std::vector<long long>(rank_, 0));
  for (int i = 0; i < rank_; ++i) w.mat[i][i] = 1;
  w.inv = w.mat;
  return w;
}

WeylElement RootSystem::simple_reflection(int i) const {
  if (i < 0 || i >= rank_) throw InputError("simple_reflection: index out of range");
  WeylElement w = identity();
  w.word = {i};
  for (int j = 0; j < rank_; ++j) w.mat[i][j] -= cartan_[i][j];
  w.inv = w.mat;
  return w;
}

WeylElement RootSystem::compose(const WeylElement& a, const WeylElement& b) const {
  WeylElement w;
  w.word = a.word;
  w.word.insert(w.word.end(), b.word.begin(), b.word.end());
  w.mat.assign(rank_, std::vector<long long>(rank_, 0));
  w.inv.assign(rank_, std::vector<long long>(rank_, 0));
  for (int i = 0; i < rank_; ++i)
    for (int k = 0; k < rank_; ++k) {
      if (a.mat[i][k] != 0)
        for (int j = 0; j < rank_; ++j) w.mat[i][j] += a.mat[i][k] * b.mat[k][j];
      if (b.inv[i][k] != 0)
        for (int j = 0; j < rank_; ++j) w.inv[i][j] += b.inv[i][k] * a.inv[k][j];
    }
  return w;
}

WeylElement RootSystem::inverse(const WeylElement& w) const {
  WeylElement v;
  v.word.assign(w.word.rbegin(), w.word.rend());
  v.mat = w.inv;
  v.inv = w.mat;
  return v;
}

WeylElement RootSystem::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = compose(w, simple_reflection(i));
  return w;
}

Root RootSystem::apply(const WeylElement& w, const Root& r) const {
  Root out{std::vector<int>(rank_, 0)};
  for (int i = 0; i < rank_; ++i) {
    long long s = 0;
    for (int j = 0; j < rank_; ++j) s += w.mat[i][j] * r.coords[j];
    out.coords[i] = static_cast<int>(s);
  }
  return out;
}

CoweightVector RootSystem::apply(const WeylElement& w, const CoweightVector& g) const {
  // The coweight action is the inverse transpose of the root action.
  CoweightVector out{std::vector<Rat>(rank_, Rat(0))};
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      if (w.inv[j][i] != 0) out.coords[i] += w.inv[j][i] * g.coords[j];
  return out;
}

std::vector<WeylElement> RootSystem::weyl_group() const {
  std::vector<WeylElement> group{identity()};
  std::map<std::vector<std::vector<long long>>, std::size_t> seen{{group[0].mat, 0}};
  std::deque<std::size_t> queue{0};
  std::vector<WeylElement> gens;
  for (int i = 0; i < rank_; ++i) gens.push_back(simple_reflection(i));
  while (!queue.empty()) {
    std::size_t idx = queue.front();
    queue.pop_front();
    for (int i = 0; i < rank_; ++i) {
      WeylElement next = compose(group[idx], gens[i]);
      if (seen.emplace(next.mat, group.size()).second) {
        group.push_back(next);
        queue.push_back(group.size() - 1);
      }
    }
  }
  return group;
}

std::pair<Family, int> parse_type(std::string_view name) {
  if (name.size() < 2) throw InputError("bad root system name: '" + std::string(name) + "'");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  std::string digits(name.substr(1));
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw InputError("bad root system name: '" + std::string(name) + "'");
  int rank = std::stoi(digits);
  switch (f) {
    case 'A': case 'B': case 'C': case 'D': case 'E': case 'F': case 'G':
      break;
    default:
      throw InputError("bad root system family: '" + std::string(name) + "'");
  }
  return {static_cast<Family>(f), rank};
}

RootSystem build_root_system(Family family, int rank) { return RootSystem::build(family, rank); }

RootSystem build_root_system(std::string_view name) {
  auto [f, r] = parse_type(name);
  return RootSystem::build(f, r);
}

} // namespace epikit
