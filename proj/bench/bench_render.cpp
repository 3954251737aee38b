// Compares the OpenMP render kernels with their serial reference versions.

#include "betatet/beta.hpp"
#include "betatet/render.hpp"

#include <benchmark/benchmark.h>

using namespace betatet;

namespace {

const Params kE(1.0, 1.0);

GridSpec grid_of(long side)
{
    GridSpec g{-3.0, 6.0, -4.0, 4.0, static_cast<int>(side), static_cast<int>(side)};
    return g;
}

PlaneMap beta_map(const GSeries& gs)
{
    return [&gs](cplx s) { return beta_eval(s, gs); };
}

void BM_PhasePlotParallel(benchmark::State& state)
{
    const GSeries gs = g_coefficients(kE);
    const auto f = beta_map(gs);
    const GridSpec grid = grid_of(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(phase_plot(f, grid));
    state.SetItemsProcessed(state.iterations() * grid.width * grid.height);
}

void BM_PhasePlotSerial(benchmark::State& state)
{
    const GSeries gs = g_coefficients(kE);
    const auto f = beta_map(gs);
    const GridSpec grid = grid_of(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(phase_plot_serial(f, grid));
    state.SetItemsProcessed(state.iterations() * grid.width * grid.height);
}

void BM_JuliaMaskParallel(benchmark::State& state)
{
    const GSeries gs = g_coefficients(kE);
    const GridSpec grid = grid_of(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(julia_mask(gs, grid));
    state.SetItemsProcessed(state.iterations() * grid.width * grid.height);
}

void BM_JuliaMaskSerial(benchmark::State& state)
{
    const GSeries gs = g_coefficients(kE);
    const GridSpec grid = grid_of(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(julia_mask_serial(gs, grid));
    state.SetItemsProcessed(state.iterations() * grid.width * grid.height);
}

}  // namespace

BENCHMARK(BM_PhasePlotParallel)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PhasePlotSerial)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JuliaMaskParallel)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_JuliaMaskSerial)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
