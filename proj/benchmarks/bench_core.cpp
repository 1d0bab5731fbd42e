#include <benchmark/benchmark.h>

#include "fibonadic/configtree.hpp"
#include "fibonadic/farey.hpp"
#include "fibonadic/fib.hpp"
#include "fibonadic/levels.hpp"
#include "fibonadic/normalize.hpp"
#include "fibonadic/word.hpp"

using namespace fibonadic;

static void BM_zeck(benchmark::State& state) {
    std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(zeck(r));
}
BENCHMARK(BM_zeck)->Arg(1000)->Arg(1000000)->Arg(1000000000);

static void BM_pi_shift(benchmark::State& state) {
    std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(pi_shift(r));
}
BENCHMARK(BM_pi_shift)->Arg(1000000);

static void BM_project(benchmark::State& state) {
    NatSeries s;
    for (int n = -8; n <= 8; ++n) s.add_at(n, 5);
    for (auto _ : state) benchmark::DoNotOptimize(project(s));
}
BENCHMARK(BM_project);

static void BM_greedy_expand(benchmark::State& state) {
    QPhi v{987, 1597};
    for (auto _ : state) benchmark::DoNotOptimize(greedy_expand(v));
}
BENCHMARK(BM_greedy_expand);

static void BM_ball(benchmark::State& state) {
    std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ball_c(r));
}
BENCHMARK(BM_ball)->Arg(50)->Arg(200);

static void BM_ball_core(benchmark::State& state) {
    std::int64_t r = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(ball_c_n(r, 3));
}
BENCHMARK(BM_ball_core)->Arg(50)->Arg(200);

static void BM_level_function(benchmark::State& state) {
    ZeckWord z = ZeckWord::with_tail({0, -2, -5}, std::nullopt);
    for (auto _ : state) benchmark::DoNotOptimize(level_function(z, {8, 13}));
}
BENCHMARK(BM_level_function);

static void BM_config(benchmark::State& state) {
    ZeckWord z = ZeckWord::with_tail({0, -2, -5}, std::nullopt);
    int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(config_of(z, n));
}
BENCHMARK(BM_config)->Arg(2)->Arg(3)->Arg(4);

BENCHMARK_MAIN();
