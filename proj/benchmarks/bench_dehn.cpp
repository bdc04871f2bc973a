#include <benchmark/benchmark.h>

#include "dehnkit/dehn.hpp"
#include "dehnkit/relators.hpp"

using namespace dehnkit;

namespace {

const FactorSystem& sys() {
  static const FactorSystem s = FactorSystem::preset("amalgam-h1");
  return s;
}

const DehnEngine& engine() {
  static const DehnEngine e(symmetrize(sys(), {build_r0(sys(), 80)}));
  return e;
}

}  // namespace

static void BM_EngineBuild(benchmark::State& state) {
  SymmetrizedSet R = symmetrize(sys(), {build_r0(sys(), 80)});
  for (auto _ : state) {
    DehnEngine e(R);
    benchmark::DoNotOptimize(e.certified());
  }
}
BENCHMARK(BM_EngineBuild)->Unit(benchmark::kMillisecond);

// Product of state.range(0) conjugates of r0.
static void BM_MembershipTrivial(benchmark::State& state) {
  const AmalgamWord r0 = build_r0(sys(), 80);
  const char* conjugators[] = {"y a^-1 x s", "a^2 h^-1", "x a y^-2"};
  AmalgamWord w;
  for (int i = 0; i < state.range(0); ++i) {
    const AmalgamWord g = parse_amalgam(sys(), conjugators[i]);
    AmalgamWord t = multiply(sys(), multiply(sys(), g, i % 2 ? inverse(r0) : r0), inverse(g));
    w = multiply(sys(), w, t);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine().membership(w));
  }
  state.counters["letters"] = static_cast<double>(w.length());
}
BENCHMARK(BM_MembershipTrivial)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_MembershipShort(benchmark::State& state) {
  const AmalgamWord w = parse_amalgam(sys(), "x a y a^2 h a^-1 y^-1 a x^3 a");
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine().membership(w));
  }
}
BENCHMARK(BM_MembershipShort)->Unit(benchmark::kMicrosecond);

static void BM_BallInjectivity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine().ball_injectivity(static_cast<unsigned>(state.range(0))));
  }
}
BENCHMARK(BM_BallInjectivity)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
