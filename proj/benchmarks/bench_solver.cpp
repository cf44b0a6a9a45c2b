#include <groupprox/apg_solver.hpp>
#include <groupprox/recovery_bench.hpp>

#include <benchmark/benchmark.h>

using namespace groupprox;

namespace {

Instance desk_instance(Index m, Index l, Index r) {
  ExperimentConfig c;
  c.m = m;
  c.l = l;
  c.r = r;
  c.k = std::max<Index>(1, r / 10);
  c.seed = 5;
  return gen_instance(c, 0);
}

// Cost of 10 solver iterations for one (p, q) variant.
void BM_ApgIterations(benchmark::State& state) {
  const Index m = state.range(0), l = 4 * m;
  const Instance inst = desk_instance(m, l, l / 8);
  const BlockNorm p = state.range(1) == 1 ? BlockNorm::l1 : BlockNorm::l2;
  const ProblemInstance problem{inst.A, inst.b, 1e-3, inst.partition, p, 0.5};
  SolverConfig config;
  config.max_iter = 10;
  config.rel_tol = 0.0;
  config.record_trace = false;
  config.step = default_step(inst.A);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apg_solve(problem, config));
  }
  state.SetItemsProcessed(state.iterations() * 10);
}
BENCHMARK(BM_ApgIterations)
    ->ArgsProduct({{64, 256}, {1, 2}})
    ->Unit(benchmark::kMicrosecond);

void BM_DefaultStep(benchmark::State& state) {
  const Index m = state.range(0);
  const Instance inst = desk_instance(m, 4 * m, m / 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(default_step(inst.A));
  }
}
BENCHMARK(BM_DefaultStep)->Arg(64)->Arg(256)->Unit(benchmark::kMicrosecond);

}  // namespace
