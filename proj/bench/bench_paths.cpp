// Serial depth-first counting against the OpenMP version and the
// group-algebra route, on the same queries.
#include <benchmark/benchmark.h>

#include "hwz/hurwitz.hpp"

using namespace hwz;

namespace {

PathQuery query(const benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    PathQuery q;
    q.alpha = Permutation::full_cycle(n);
    q.d = static_cast<int>(state.range(1));
    q.r = n - 1 + 2 * q.d;  // beta = identity, the Schroeder-type count
    q.kind = Monotonicity::weak;
    return q;
}

void BM_serial(benchmark::State& state) {
    const PathQuery q = query(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_paths_serial(q));
}

void BM_openmp(benchmark::State& state) {
    const PathQuery q = query(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_paths(q));
}

void BM_fast(benchmark::State& state) {
    const PathQuery q = query(state);
    for (auto _ : state) benchmark::DoNotOptimize(count_paths_fast(q));
}

void args(benchmark::internal::Benchmark* b) {
    for (int n : {4, 5, 6})
        for (int d : {0, 1}) b->Args({n, d});
}

}  // namespace

BENCHMARK(BM_serial)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_openmp)->Apply(args)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_fast)->Apply(args)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
