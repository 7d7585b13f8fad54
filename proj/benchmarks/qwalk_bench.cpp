#include "qwalk/classifier.hpp"
#include "qwalk/enumerator.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace qwalk;

Model sample(Support s, int a, int b) { return build_model(s, Weighting::unit(s, a, b)); }

void BM_Enumerate(benchmark::State& state)
{
    const Model m = sample(Support::S5, 2, 3);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(enumerate(m, N));
}
BENCHMARK(BM_Enumerate)->Arg(12)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

void BM_FunctionalEquation(benchmark::State& state)
{
    const Model m = sample(Support::S4, 2, 2);
    const SeriesTruncation s = enumerate(m, 8);
    for (auto _ : state)
        benchmark::DoNotOptimize(functional_equation_residual(m, s, 8));
}
BENCHMARK(BM_FunctionalEquation)->Unit(benchmark::kMillisecond);

void BM_CriticalSets(benchmark::State& state)
{
    const Model m = sample(static_cast<Support>(state.range(0)), 5, 2);
    for (auto _ : state)
        benchmark::DoNotOptimize(critical_sets(m));
}
BENCHMARK(BM_CriticalSets)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_SigmaOrbit(benchmark::State& state)
{
    const Model m = sample(Support::S1, 3, 2);
    const CurvePoint p = critical_points(m)[1];
    const int w = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(sigma_orbit(m, p, w));
}
BENCHMARK(BM_SigmaOrbit)->Arg(2)->Arg(5)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BuildMatrices(benchmark::State& state)
{
    const Model m = sample(static_cast<Support>(state.range(0)), 5, 2);
    const CriticalSets sets = critical_sets(m);
    for (auto _ : state)
        benchmark::DoNotOptimize(build_matrices(m, sets));
}
BENCHMARK(BM_BuildMatrices)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state)
{
    const Model m = sample(static_cast<Support>(state.range(0)), 4, 3);
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(m));
}
BENCHMARK(BM_Classify)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
