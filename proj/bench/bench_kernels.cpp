// Serial reference vs OpenMP kernels. Set OMP_NUM_THREADS to compare.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "splitq/kernels.hpp"
#include "splitq/witness.hpp"

namespace {

using namespace splitq;

std::vector<double> grid(std::size_t n) { return uniform_grid(0.0, 10.0, n); }

std::vector<Triple> triples(std::size_t n) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> p(0.01, 1.0), th(0.0, 5.0);
  std::vector<Triple> out(n);
  for (auto& t : out) {
    t.p1 = p(rng);
    t.p2 = p(rng);
    t.p_prime = hyp_law(t.p1, t.p2, th(rng), 1);
  }
  return out;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto g = grid(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_serial(Law::kHyp, 0.3, 0.6, 1, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_SweepParallel(benchmark::State& state) {
  const auto g = grid(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sweep(Law::kHyp, 0.3, 0.6, 1, g));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifySerial(benchmark::State& state) {
  const auto t = triples(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch_serial(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ClassifyParallel(benchmark::State& state) {
  const auto t = triples(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_batch(t));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountWitnessesSerial(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(count_witnesses_serial(1, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CountWitnessesParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(count_witnesses(1, state.range(0)));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_SweepSerial)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_SweepParallel)->Arg(1 << 12)->Arg(1 << 16);
BENCHMARK(BM_ClassifySerial)->Arg(1 << 16);
BENCHMARK(BM_ClassifyParallel)->Arg(1 << 16);
BENCHMARK(BM_CountWitnessesSerial)->Arg(1 << 14);
BENCHMARK(BM_CountWitnessesParallel)->Arg(1 << 14);

BENCHMARK_MAIN();
