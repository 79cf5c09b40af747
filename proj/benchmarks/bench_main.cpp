#include <benchmark/benchmark.h>

#include "drshadow/enumeration.hpp"
#include "drshadow/inverse_limit.hpp"
#include "drshadow/sampling.hpp"
#include "drshadow/shadowing.hpp"
#include "drshadow/systems.hpp"

using namespace drshadow;

namespace {

void BM_EnumerateTuples(benchmark::State& state) {
  const auto j = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_tuples(j));
}
BENCHMARK(BM_EnumerateTuples)->Arg(10)->Arg(1000)->Arg(1000000);

void BM_W0DistanceNat(benchmark::State& state) {
  const W0Metric metric(BaseSpace::nat());
  const auto x = W0Word::finite({nat(2), nat(1), nat(0)});
  const auto y = W0Word::finite({nat(2), nat(1), nat(1)});
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(metric.distance(x, y, bound));
}
BENCHMARK(BM_W0DistanceNat)->Arg(100)->Arg(1000);

// The second letters split at bit 2, which no tuple below 1000 sees, so the
// scan runs to the bound.
void BM_W0DistanceCantor(benchmark::State& state) {
  const W0Metric metric(BaseSpace::cantor_minus(CantorPoint::constant('1')));
  const auto x = W0Word::finite({cantor("01(0)*"), cantor("(10)*")});
  const auto y = W0Word::finite({cantor("01(0)*"), cantor("1(0)*")});
  for (auto _ : state) benchmark::DoNotOptimize(metric.distance(x, y, 1000));
}
BENCHMARK(BM_W0DistanceCantor);

void BM_ShadowPoint(benchmark::State& state) {
  const auto sys = variable_length_shift();
  const auto po = make_pseudo_orbit(sys, static_cast<std::size_t>(state.range(0)), 3, Perturbation::kFlipBit, 7);
  for (auto _ : state) benchmark::DoNotOptimize(shadow_point(sys, po));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShadowPoint)->RangeMultiplier(2)->Range(4, 64)->Complexity();

void BM_LiftAndVerify(benchmark::State& state) {
  const auto sys = system_by_name("vls");
  const W0Metric metric(sys->space());
  const auto l = static_cast<std::uint64_t>(state.range(0));
  const auto po = make_pseudo_orbit(*sys, 8, min_lift_delta_level(*sys, l), Perturbation::kFlipBit, 3);
  for (auto _ : state) {
    const auto upo = lift_pseudo_orbit(sys, po, l, tuple_depth(l) + 1);
    benchmark::DoNotOptimize(verify_lift(metric, upo));
  }
}
BENCHMARK(BM_LiftAndVerify)->DenseRange(2, 8, 2);

void BM_VerifySeparation(benchmark::State& state) {
  const auto sys = first_return_map();
  for (auto _ : state) {
    Rng rng(1);
    benchmark::DoNotOptimize(verify_separation(sys, 100, rng));
  }
}
BENCHMARK(BM_VerifySeparation);

}  // namespace
BENCHMARK_MAIN();
