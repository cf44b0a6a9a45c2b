#include <groupprox/l1q_prox.hpp>
#include <groupprox/l2q_prox.hpp>
#include <groupprox/scalar_prox.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace groupprox;

namespace {

std::vector<Vector> random_blocks(Index n, std::size_t count) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  std::vector<Vector> out(count, Vector(n));
  for (auto& v : out)
    for (Index i = 0; i < n; ++i) v[i] = dist(rng);
  return out;
}

void BM_ProxScalar(benchmark::State& state) {
  const ScalarPenalty pen(1.0, static_cast<double>(state.range(0)) / 100.0);
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> dist(-4.0, 4.0);
  std::vector<double> taus(1024);
  for (double& t : taus) t = dist(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_scalar(pen, taus[i++ & 1023]));
  }
}
BENCHMARK(BM_ProxScalar)->Arg(50)->Arg(67)->Arg(30);

void BM_ProxL1q(benchmark::State& state) {
  const auto blocks = random_blocks(state.range(0), 256);
  const ScalarPenalty pen(1.0, 0.5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_l1q(blocks[i++ & 255], pen));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ProxL1q)->RangeMultiplier(4)->Range(2, 512)->Complexity();

void BM_ProxL1qGeneric(benchmark::State& state) {
  const auto blocks = random_blocks(state.range(0), 256);
  const ScalarPenalty pen(1.0, 0.3);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_l1q(blocks[i++ & 255], pen));
  }
}
BENCHMARK(BM_ProxL1qGeneric)->Arg(8)->Arg(64);

void BM_ProxL2q(benchmark::State& state) {
  const auto blocks = random_blocks(state.range(0), 256);
  const ScalarPenalty pen(1.0, 0.5);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(prox_l2q(blocks[i++ & 255], pen));
  }
}
BENCHMARK(BM_ProxL2q)->RangeMultiplier(4)->Range(2, 512);

}  // namespace
