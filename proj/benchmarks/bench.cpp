#include <benchmark/benchmark.h>

#include "powsum/audit.hpp"
#include "powsum/completion.hpp"
#include "powsum/triples.hpp"

using namespace powsum;

static void BM_CompletePower(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto id = complete_power(n);
        benchmark::DoNotOptimize(id);
    }
}
BENCHMARK(BM_CompletePower)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

static void BM_VerifyMasterIdentity(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(verify_master_identity(n));
}
BENCHMARK(BM_VerifyMasterIdentity)->Arg(16)->Arg(64);

static void BM_EnumerateTriples(benchmark::State& state) {
    BigInt m_max(state.range(0));
    for (auto _ : state) {
        auto records = enumerate_triples(m_max);
        benchmark::DoNotOptimize(records);
    }
}
BENCHMARK(BM_EnumerateTriples)->Arg(50)->Arg(200);

static void BM_Search(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    long bound = state.range(1);
    for (auto _ : state) {
        auto rep = search_solutions(n, bound);
        benchmark::DoNotOptimize(rep);
    }
}
BENCHMARK(BM_Search)->Args({2, 300})->Args({3, 200});

BENCHMARK_MAIN();
