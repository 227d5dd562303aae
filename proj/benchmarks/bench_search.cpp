#include <benchmark/benchmark.h>

#include "simulacra/cone.hpp"
#include "simulacra/partitions.hpp"
#include "simulacra/search.hpp"

namespace {

using namespace simulacra;

void partitions_skip_two(benchmark::State& state) {
  PartitionConstraints c;
  c.total = state.range(0);
  c.skip_two = true;
  for (auto _ : state) {
    benchmark::DoNotOptimize(partition_count(c));
  }
}

void enumerate_all_cones(benchmark::State& state) {
  for (auto _ : state) {
    Int n = 0;
    for_each_cone(state.range(0), SearchPolicy::full(), [&n](const Cone&) {
      ++n;
      return true;
    });
    benchmark::DoNotOptimize(n);
  }
}

void simulacra_of_lnln(benchmark::State& state) {
  const Cone target = lorentz(state.range(0)) + lorentz(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_simulacra(target, SearchPolicy::full()));
  }
}

void first_simulacrum_of_lnln(benchmark::State& state) {
  const Cone target = lorentz(state.range(0)) + lorentz(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_simulacra(target, SearchPolicy::full()));
  }
}

void simulacra_of_complex_plus_lorentz(benchmark::State& state) {
  const Cone target = complex_psd(3) + lorentz(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_simulacra(target, SearchPolicy::full()));
  }
}

}  // namespace

BENCHMARK(partitions_skip_two)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(enumerate_all_cones)->Arg(12)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(simulacra_of_lnln)->Arg(10)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(first_simulacrum_of_lnln)->Arg(30)->Arg(60)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(simulacra_of_complex_plus_lorentz)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
