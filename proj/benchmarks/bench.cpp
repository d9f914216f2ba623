#include <benchmark/benchmark.h>

#include "epikit/abelianization.hpp"
#include "epikit/chevalley.hpp"
#include "epikit/depth.hpp"
#include "epikit/intertwine.hpp"
#include "epikit/stability.hpp"

#include <random>

using namespace epikit;

namespace {

BuildingPoint alcove(const RootSystem& sys) {
  KacCoords ones;
  ones.b.assign(sys.rank() + 1, 1);
  return kac_to_point(sys, ones);
}

void BM_BuildRootSystem(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(build_root_system(Family::B, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildRootSystem)->Arg(4)->Arg(8);

void BM_ChevalleyTable(benchmark::State& state) {
  RootSystem f4 = build_root_system("F4");
  for (auto _ : state) benchmark::DoNotOptimize(ChevalleyConstants(f4));
}
BENCHMARK(BM_ChevalleyTable);

void BM_ComputeSx(benchmark::State& state) {
  RootSystem sys = build_root_system(Family::B, static_cast<int>(state.range(0)));
  BuildingPoint x = alcove(sys);
  for (auto _ : state) benchmark::DoNotOptimize(compute_sx(sys, 2, 2, x));
}
BENCHMARK(BM_ComputeSx)->Arg(5)->Arg(8);

void BM_ConeTrivial(benchmark::State& state) {
  RootSystem b5 = build_root_system("B5");
  std::vector<Root> s;
  Root neg = b5.highest_root();
  for (int& c : neg.coords) c = -c;
  s.push_back(neg);
  for (const Root& a : b5.simple_roots()) s.push_back(a);
  for (auto _ : state) benchmark::DoNotOptimize(is_cone_trivial(b5, s));
}
BENCHMARK(BM_ConeTrivial);

void BM_MinDepth(benchmark::State& state) {
  RootSystem sys = build_root_system(Family::B, static_cast<int>(state.range(0)));
  BuildingPoint x = alcove(sys);
  std::vector<AffineRoot> roots;
  for (const SxEntry& e : compute_sx(sys, 2, 2, x).entries)
    for (const AffineRoot& r : e.roots) roots.push_back(r);
  std::vector<SupportProfile> family{SupportProfile{roots, roots}};
  for (auto _ : state) benchmark::DoNotOptimize(min_depth(sys, family));
}
BENCHMARK(BM_MinDepth)->Arg(5)->Arg(8);

void BM_EnumerateCandidates(benchmark::State& state) {
  RootSystem g2 = build_root_system("G2");
  BuildingPoint x = alcove(g2);
  std::vector<AffineRoot> supp{AffineRoot{Root{{-3, -2}}, 1}, AffineRoot{Root{{0, 1}}, 0},
                               AffineRoot{Root{{1, 1}}, 0}, AffineRoot{Root{{2, 1}}, 0}};
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_candidates(g2, x, supp, LatticeMode::SimplyConnected));
}
BENCHMARK(BM_EnumerateCandidates);

} // namespace

BENCHMARK_MAIN();
