// OpenMP kernels against their serial references. Arg 0 of the parallel
// cases is the worker count.

#include <benchmark/benchmark.h>

#include "gaussmf/ergodic.hpp"
#include "gaussmf/folner.hpp"
#include "gaussmf/omega.hpp"
#include "gaussmf/parallel.hpp"
#include "gaussmf/stochastic.hpp"

namespace {

using namespace gmf;

const DilatedFolner& square()
{
    static const DilatedFolner seq(JordanRegion::rectangle(0, 1, 0, 1));
    return seq;
}

void BM_OmegaTable(benchmark::State& st)
{
    set_workers(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(omega_box_table(1000));
    set_workers(0);
}
BENCHMARK(BM_OmegaTable)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_OmegaTableReference(benchmark::State& st)
{
    for (auto _ : st) benchmark::DoNotOptimize(omega_box_table_reference(1000));
}
BENCHMARK(BM_OmegaTableReference)->Unit(benchmark::kMillisecond);

void BM_Average(benchmark::State& st)
{
    const MultFunc f = liouville_norm();
    set_workers(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(average(f, square(), 500));
    set_workers(0);
}
BENCHMARK(BM_Average)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_AverageReference(benchmark::State& st)
{
    const MultFunc f = liouville_norm();
    for (auto _ : st) benchmark::DoNotOptimize(average_reference(f, square(), 500));
}
BENCHMARK(BM_AverageReference)->Unit(benchmark::kMillisecond);

void BM_TauAverage(benchmark::State& st)
{
    const auto s = DynamicalSystem::cyclic(5);
    set_workers(static_cast<int>(st.range(0)));
    for (auto _ : st) {
        benchmark::DoNotOptimize(
            tau_orbit_average(s, s.origin(), TauAssignment{2, 1, 3}, Observable::indicator(0), square(), 300));
    }
    set_workers(0);
}
BENCHMARK(BM_TauAverage)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_TauAverageReference(benchmark::State& st)
{
    const auto s = DynamicalSystem::cyclic(5);
    for (auto _ : st) {
        benchmark::DoNotOptimize(tau_orbit_average_reference(s, s.origin(), TauAssignment{2, 1, 3},
                                                             Observable::indicator(0), square(), 300));
    }
}
BENCHMARK(BM_TauAverageReference)->Unit(benchmark::kMillisecond);

void BM_ValueGrid(benchmark::State& st)
{
    const MultFunc f = random_pm1(1);
    set_workers(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(ValueGrid(f, 300));
    set_workers(0);
}
BENCHMARK(BM_ValueGrid)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
