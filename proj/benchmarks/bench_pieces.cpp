#include <benchmark/benchmark.h>

#include "dehnkit/cancellation.hpp"
#include "dehnkit/relators.hpp"

using namespace dehnkit;

static void BM_Symmetrize(benchmark::State& state) {
  FactorSystem sys = FactorSystem::preset("amalgam-h1");
  AmalgamWord r0 = build_r0(sys, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetrize(sys, {r0}));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(r0.length()));
}
BENCHMARK(BM_Symmetrize)->Arg(8)->Arg(37)->Arg(80)->Unit(benchmark::kMillisecond);

static void BM_PieceScan(benchmark::State& state) {
  FactorSystem sys = FactorSystem::preset("amalgam-h1");
  SymmetrizedSet R = symmetrize(sys, {build_r0(sys, static_cast<unsigned>(state.range(0)))});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pieces(R));
  }
  state.counters["members"] = static_cast<double>(R.size());
}
BENCHMARK(BM_PieceScan)->Arg(8)->Arg(37)->Arg(80)->Arg(160)->Unit(benchmark::kMillisecond);

static void BM_JointFamily(benchmark::State& state) {
  FactorSystem sys = FactorSystem::preset("amalgam-h1");
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        joint_family_check(sys, 80, static_cast<unsigned>(state.range(0)), Rational(1, 10)));
  }
}
BENCHMARK(BM_JointFamily)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
