#include "mordell/class_field.hpp"
#include "mordell/cubic_forms.hpp"
#include "mordell/mordell_search.hpp"
#include "mordell/periods.hpp"
#include "mordell/twists.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace mordell;

static void BM_PointScan(benchmark::State & state)
{
    search::MordellCurve curve(BigInt(17));
    auto window = search::SearchWindow::symmetric(state.range(0));
    search::SearchOptions opts;
    opts.threads = static_cast<unsigned>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(search::integral_points(curve, window, opts));
    state.SetItemsProcessed(state.iterations() * (2 * state.range(0) + 1));
}
BENCHMARK(BM_PointScan)->Args({100'000, 1})->Args({1'000'000, 1})->Args({1'000'000, 4})->UseRealTime()->Unit(benchmark::kMillisecond);

static void BM_ClassGroup(benchmark::State & state)
{
    auto delta = -state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(field::class_group(delta));
}
BENCHMARK(BM_ClassGroup)->Arg(3299)->Arg(99'995)->Arg(999'995)->Unit(benchmark::kMicrosecond);

static void BM_AgmLongDouble(benchmark::State & state)
{
    long double b = std::sqrt(0.5L);
    for (auto _ : state)
        benchmark::DoNotOptimize(periods::agm(1.0L, b));
}
BENCHMARK(BM_AgmLongDouble);

static void BM_AgmMpfr(benchmark::State & state)
{
    set_mpfr_precision_bits(static_cast<unsigned>(state.range(0)));
    MpfrReal one(1), b = sqrt(MpfrReal(0.5));
    MpfrReal tol = pow(MpfrReal(2), -static_cast<long>(state.range(0)) + 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(periods::agm<MpfrReal>(one, b, tol));
}
BENCHMARK(BM_AgmMpfr)->Arg(128)->Arg(1024);

static void BM_TwistPartialSum(benchmark::State & state)
{
    twists::WeierstrassCurve E(BigInt(-1), BigInt(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(twists::duke_partial_sum(E, static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_TwistPartialSum)->Arg(1000)->Arg(10'000)->Unit(benchmark::kMillisecond);

static void BM_CubicSyzygy(benchmark::State & state)
{
    cubic::BinaryCubicForm f{BigInt(17), BigInt(-23), BigInt(41), BigInt(-5)};
    for (auto _ : state)
        benchmark::DoNotOptimize(cubic::check_syzygy(f));
}
BENCHMARK(BM_CubicSyzygy);

BENCHMARK_MAIN();
