#include <benchmark/benchmark.h>

#include <random>

#include "scs/distributed_space.hpp"
#include "scs/instances.hpp"

namespace {

// Args: powerset size k, agent count m.
scs::SCS instance(const benchmark::State& state) {
  std::mt19937_64 rng(1234);
  return scs::random_scs(scs::powerset_lattice(static_cast<int>(state.range(0))),
                         static_cast<std::size_t>(state.range(1)), rng);
}

void recursive(benchmark::State& state, scs::Algorithm alg) {
  const auto s = instance(state);
  const auto group = s.all_agents();
  std::uint64_t candidates = 0;
  for (auto _ : state) {
    auto r = scs::delta_table(s, group, alg);
    candidates = r.op_counts.candidates;
    benchmark::DoNotOptimize(r.table.table().data());
  }
  state.counters["candidates"] = static_cast<double>(candidates);
}

void BM_Part1(benchmark::State& state) { recursive(state, scs::Algorithm::Part1); }
void BM_Part2(benchmark::State& state) { recursive(state, scs::Algorithm::Part2); }
void BM_Part3(benchmark::State& state) { recursive(state, scs::Algorithm::Part3); }

void BM_Oracle(benchmark::State& state) {
  const auto s = instance(state);
  const auto group = s.all_agents();
  for (auto _ : state) {
    auto r = scs::delta_oracle(s, group);
    benchmark::DoNotOptimize(r.table.table().data());
  }
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int k : {2, 3, 4, 5})
    for (int m : {2, 4, 8}) b->Args({k, m});
}

}  // namespace

BENCHMARK(BM_Part1)->Apply(sizes);
BENCHMARK(BM_Part2)->Apply(sizes);
BENCHMARK(BM_Part3)->Apply(sizes);
BENCHMARK(BM_Oracle)->Args({2, 2})->Args({3, 2})->Args({3, 4})->Args({4, 2});
BENCHMARK_MAIN();
