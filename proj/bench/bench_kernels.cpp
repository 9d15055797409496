// Serial vs parallel timings of the tabulated defect kernels.
#include <benchmark/benchmark.h>

#include "algebroid/fixtures.hpp"
#include "algebroid/random.hpp"
#include "algebroid/suite.hpp"

using namespace algebroid;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) ? Exec::Parallel : Exec::Serial; }

void lie_axioms(benchmark::State& state) {
  const LieAlgebroid l = fixtures::so3();
  for (auto _ : state) benchmark::DoNotOptimize(check_lie_axioms(l, exec_of(state)));
}

void kv(benchmark::State& state) {
  RandomSource rng(1, 3);
  const LeftSymmetricAlgebroid s = fixtures::tm_nabla_2d();
  const Matrix h = rng.symmetric(s.chart(), s.rank());
  for (auto _ : state) benchmark::DoNotOptimize(kv_bracket(s, h, exec_of(state)));
}

void delta(benchmark::State& state) {
  RandomSource rng(2, 3);
  const LeftSymmetricAlgebroid s = fixtures::tm_nabla_2d();
  Cochain w(2, 1);
  for (Mask m : masks_of_degree(2, 1))
    for (int j = 0; j < 2; ++j) w.set(m, j, rng.polynomial(s.chart()));
  for (auto _ : state) benchmark::DoNotOptimize(coboundary(s, w, exec_of(state)));
}

void fixtures_all(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(run_fixtures(exec_of(state)));
}

}  // namespace

BENCHMARK(lie_axioms)->Arg(0)->Arg(1);
BENCHMARK(kv)->Arg(0)->Arg(1);
BENCHMARK(delta)->Arg(0)->Arg(1);
BENCHMARK(fixtures_all)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
