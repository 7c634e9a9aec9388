#include <benchmark/benchmark.h>

#include "gcdel/experiments.hpp"
#include "gcdel/gc.hpp"
#include "gcdel/rng.hpp"
#include "gcdel/sync.hpp"

using namespace gcdel;

namespace {

GcParams table_params(int k, int delta, int ell) {
    GcParams p;
    p.k = k;
    p.delta = delta;
    p.c = delta + 1;
    p.ell = ell;
    return p;
}

void BM_Encode(benchmark::State& state) {
    const GcCode code(table_params(static_cast<int>(state.range(0)), 2,
                                   static_cast<int>(state.range(1))));
    Rng rng(7);
    const BitString u = rng.random_bits(static_cast<std::size_t>(code.k()));
    for (auto _ : state)
        benchmark::DoNotOptimize(code.encode(u));
}
BENCHMARK(BM_Encode)->Args({256, 8})->Args({1024, 16});

void BM_Decode(benchmark::State& state) {
    const GcCode code(table_params(static_cast<int>(state.range(0)),
                                   static_cast<int>(state.range(2)),
                                   static_cast<int>(state.range(1))));
    Rng rng(7);
    const BitString u = rng.random_bits(static_cast<std::size_t>(code.k()));
    const BitString x = code.encode(u);
    const auto pos = rng.sample_deletion_positions(x.size(),
                                                   static_cast<std::size_t>(code.delta()));
    const BitString y = delete_at(x, pos);
    for (auto _ : state)
        benchmark::DoNotOptimize(code.decode(y));
}
BENCHMARK(BM_Decode)->Args({256, 8, 2})->Args({256, 8, 3})->Args({1024, 16, 2});

void BM_SyncRun(benchmark::State& state) {
    Rng rng(11);
    const BitString x = rng.random_bits(static_cast<std::size_t>(state.range(0)));
    const auto pos = rng.sample_deletion_positions(x.size(),
                                                   static_cast<std::size_t>(state.range(1)));
    const BitString y = delete_at(x, pos);
    const SyncConfig cfg;
    const auto strategy = state.range(2) == 0 ? SyncStrategy::Vt : SyncStrategy::Gc;
    for (auto _ : state)
        benchmark::DoNotOptimize(sync_run(x, y, strategy, cfg));
}
BENCHMARK(BM_SyncRun)->Args({100000, 50, 0})->Args({100000, 50, 1});

} // namespace

BENCHMARK_MAIN();
