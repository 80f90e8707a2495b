#include <benchmark/benchmark.h>

#include "vspan/generators.hpp"
#include "vspan/statesum.hpp"
#include "vspan/surface.hpp"

namespace {

// Torus-style two-strand closures give a deterministic workload at any
// crossing count without touching the random sampler.
void bm_bracket(benchmark::State& state) {
    int crossings = static_cast<int>(state.range(0));
    vspan::Diagram d = vspan::gen_k({crossings});
    vspan::BracketOptions opts;
    opts.max_crossings = crossings;
    for (auto _ : state) {
        benchmark::DoNotOptimize(vspan::bracket(d, opts));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << crossings));
}

void bm_bracket_threaded(benchmark::State& state) {
    int crossings = static_cast<int>(state.range(0));
    vspan::Diagram d = vspan::gen_k({crossings});
    vspan::BracketOptions opts;
    opts.max_crossings = crossings;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(vspan::bracket(d, opts));
    }
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << crossings));
}

void bm_genus(benchmark::State& state) {
    int crossings = static_cast<int>(state.range(0));
    vspan::Diagram d = vspan::gen_k({crossings});
    for (auto _ : state) {
        benchmark::DoNotOptimize(vspan::genus(d));
    }
}

BENCHMARK(bm_bracket)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_bracket_threaded)
    ->Args({16, 2})
    ->Args({16, 4})
    ->Args({20, 4})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(bm_genus)->Arg(64)->Arg(256);

} // namespace

BENCHMARK_MAIN();
