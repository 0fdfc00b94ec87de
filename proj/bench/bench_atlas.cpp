#include <benchmark/benchmark.h>

#include "orbiseif/atlas.hpp"

using namespace orbiseif;

static void atlas(benchmark::State& state, const char* geometry, Execution exec) {
    const int bound = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto a = build_atlas(geometry, bound, exec);
        benchmark::DoNotOptimize(a.classes.data());
    }
}

BENCHMARK_CAPTURE(atlas, flat_serial, "flat", Execution::serial)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atlas, flat_parallel, "flat", Execution::parallel)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atlas, spherical_serial, "spherical", Execution::serial)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atlas, spherical_parallel, "spherical", Execution::parallel)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atlas, bad_serial, "bad", Execution::serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(atlas, bad_parallel, "bad", Execution::parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
