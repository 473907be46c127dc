#include "rhcurve/connection.hpp"
#include "rhcurve/curve.hpp"
#include "rhcurve/local_algebra.hpp"
#include "rhcurve/series.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace rhc;

namespace {

USeries sample_series(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(-9, 9);
    std::vector<GR> c(n);
    for (std::size_t k = 1; k < n; ++k) {
        c[k] = GR::fraction(d(rng), 1 + k % 4);
    }
    return USeries(n, std::move(c));
}

void BM_SeriesMultiply(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    USeries a = sample_series(n, 1), b = sample_series(n, 2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(a * b);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesMultiply)->RangeMultiplier(2)->Range(10, 80)->Complexity();

void BM_SeriesExp(benchmark::State& state)
{
    USeries a = sample_series(static_cast<std::size_t>(state.range(0)), 3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(u_exp(a));
    }
}
BENCHMARK(BM_SeriesExp)->Arg(20)->Arg(40);

void BM_NewtonPuiseux(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(newton_puiseux(nontame::curve(), n));
    }
}
BENCHMARK(BM_NewtonPuiseux)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_SubalgebraMembership(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Normalization nz(nontame::curve(), {nontame::branch(n)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(subalgebra_membership({USeries::monomial(n, 1)}, nz, n));
    }
}
BENCHMARK(BM_SubalgebraMembership)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_ClassifyReference(benchmark::State& state)
{
    const auto n = static_cast<std::size_t>(state.range(0));
    Normalization nz(nontame::curve(), {nontame::branch(n)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(nontame::connection(), nz, n, 8));
    }
}
BENCHMARK(BM_ClassifyReference)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
