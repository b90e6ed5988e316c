#include "knotsig/invariants.hpp"
#include "knotsig/report.hpp"
#include "knotsig/skein.hpp"
#include "knotsig/torus.hpp"

#include <benchmark/benchmark.h>

using namespace knotsig;

namespace {

Execution mode(const benchmark::State& state)
{
    return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "parallel");
}

void BM_TorusSweep(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(sweep_torus(30, mode(state)));
    label(state);
}

void BM_CatalogCheck(benchmark::State& state)
{
    const auto recs = load_catalog(KNOTSIG_CATALOG);
    for (auto _ : state) benchmark::DoNotOptimize(check_catalog(recs, mode(state)));
    label(state);
}

void BM_SignatureSamples(benchmark::State& state)
{
    const IntMatrix v = seifert_matrix(torus_braid(TorusKnot(5, 11)));
    for (auto _ : state) benchmark::DoNotOptimize(signature_samples(v, 2000, mode(state)));
    label(state);
}

void BM_JumpDivisor(benchmark::State& state)
{
    const IntMatrix v = seifert_matrix(torus_braid(TorusKnot(7, 8)));
    for (auto _ : state) benchmark::DoNotOptimize(jump_divisor(v, mode(state)));
    label(state);
}

void BM_Tbordered(benchmark::State& state)
{
    for (auto _ : state) benchmark::DoNotOptimize(verify_lemma_tbordered(6, 500, 1, mode(state)));
    label(state);
}

}  // namespace

BENCHMARK(BM_TorusSweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CatalogCheck)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SignatureSamples)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JumpDivisor)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Tbordered)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
