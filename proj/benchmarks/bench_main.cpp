#include <benchmark/benchmark.h>

#include "rcx/colouring.hpp"
#include "rcx/graph.hpp"
#include "rcx/oracle.hpp"
#include "rcx/solver.hpp"

namespace {

void BM_CycleEnumerationComplete(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        std::size_t count = 0;
        rcx::for_each_cycle_through(g, {}, {}, [&](const rcx::Cycle&) {
            ++count;
            return true;
        });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_CycleEnumerationComplete)->Arg(6)->Arg(7)->Arg(8);

void BM_ShortCyclesThroughPair(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::complete(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rcx::cycles_through(g, {0, 1, 2}, 4).size());
    }
}
BENCHMARK(BM_ShortCyclesThroughPair)->Arg(20)->Arg(66);

void BM_Decide3Colourable(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::random(static_cast<int>(state.range(0)), 0.3, 99);
    for (auto _ : state) benchmark::DoNotOptimize(rcx::decide_crx1_le3(g));
}
BENCHMARK(BM_Decide3Colourable)->Arg(20)->Arg(60)->Arg(120);

void BM_VerifyPairsOnConstruction(benchmark::State& state) {
    const rcx::EdgeColouring c =
        rcx::construct_2rainbow_complete(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(rcx::verify_k_rainbow(c, 2).ok);
}
BENCHMARK(BM_VerifyPairsOnConstruction)->Arg(8)->Arg(12);

void BM_ExactIndexK4(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::complete(4);
    for (auto _ : state) benchmark::DoNotOptimize(rcx::crx_exact(g, 2));
}
BENCHMARK(BM_ExactIndexK4);

void BM_OracleBruteforceK4(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::complete(4);
    for (auto _ : state) benchmark::DoNotOptimize(rcx::oracle::crx_bruteforce(g, 2, 5));
}
BENCHMARK(BM_OracleBruteforceK4);

void BM_VertexConnectivity(benchmark::State& state) {
    const rcx::Graph g = rcx::Graph::random(static_cast<int>(state.range(0)), 0.4, 7);
    for (auto _ : state) benchmark::DoNotOptimize(rcx::vertex_connectivity(g));
}
BENCHMARK(BM_VertexConnectivity)->Arg(12)->Arg(24);

}  // namespace

BENCHMARK_MAIN();
