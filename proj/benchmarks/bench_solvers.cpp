#include <benchmark/benchmark.h>

#include "sconn/cactus.hpp"
#include "sconn/gadgets.hpp"
#include "sconn/solver.hpp"

using namespace sconn;

static void BM_CactusDp(benchmark::State& state) {
    int n = (int)state.range(0);
    Graph g = gen_random_cactus(n, 42);
    for (auto _ : state) {
        auto eq = solve_cactus_r3(g);
        benchmark::DoNotOptimize(eq.cost_a);
    }
    state.SetComplexityN(n);
}
BENCHMARK(BM_CactusDp)->RangeMultiplier(2)->Range(250, 4000)->Complexity()->Unit(benchmark::kMillisecond);

static void BM_ExactExample1(benchmark::State& state) {
    Graph g = gen_example(1);
    for (auto _ : state) {
        auto eq = solve_exact(g, RuleSet{});
        benchmark::DoNotOptimize(eq.cost_a);
    }
}
BENCHMARK(BM_ExactExample1);

static void BM_ExactRandomCactusR3(benchmark::State& state) {
    Graph g = gen_random_cactus((int)state.range(0), 7);
    for (auto _ : state) {
        auto eq = solve_exact(g, RuleSet{true});
        benchmark::DoNotOptimize(eq.cost_a);
    }
}
BENCHMARK(BM_ExactRandomCactusR3)->DenseRange(8, 12, 2)->Unit(benchmark::kMillisecond);

static void BM_TreeSolver(benchmark::State& state) {
    Graph g = gen_random_tree((int)state.range(0), 11);
    for (auto _ : state) {
        auto eq = solve_tree(g);
        benchmark::DoNotOptimize(eq.cost_a);
    }
}
BENCHMARK(BM_TreeSolver)->Arg(1000)->Unit(benchmark::kMicrosecond);

static void BM_FeasibilityOracle(benchmark::State& state) {
    Graph g = gen_example(3, Cost(5));
    for (auto _ : state) {
        bool ok = feasibility_precheck(g, RuleSet{});
        benchmark::DoNotOptimize(ok);
    }
}
BENCHMARK(BM_FeasibilityOracle);

BENCHMARK_MAIN();
