#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <polyfoil/calculus.hpp>
#include <polyfoil/foliation.hpp>
#include <polyfoil/inscribable.hpp>
#include <polyfoil/matrix.hpp>
#include <polyfoil/optimize.hpp>
#include <polyfoil/polygon.hpp>

using namespace polyfoil;

namespace {

StarPolygon sample_polygon(int n) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> ray(0.8, 1.4);
    const double alpha = 2.0 * 3.14159265358979 / (n + 1);
    std::vector<double> lengths(2 * n - 3);
    std::vector<double> t(n - 1);
    for (double& v : t) v = ray(rng);
    for (int k = 1; k <= n - 1; ++k) lengths[2 * k - 2] = t[k - 1];
    for (int k = 1; k <= n - 2; ++k) {
        const double a = t[k - 1], b = t[k];
        lengths[2 * k - 1] = std::sqrt(a * a + b * b - 2 * a * b * std::cos(alpha));
    }
    return star_polygon(std::move(lengths));
}

void BM_HeronArea(benchmark::State& state) {
    const TriangleTriple tr{1.1, 0.9, 1.3};
    for (auto _ : state) benchmark::DoNotOptimize(heron_area(tr));
}
BENCHMARK(BM_HeronArea);

void BM_AreaGradient(benchmark::State& state) {
    const StarPolygon p = sample_polygon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(grad_area(p));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_AreaGradient)->DenseRange(4, 12, 4)->Complexity(benchmark::oN);

void BM_ClassifyRank(benchmark::State& state) {
    const StarPolygon p = sample_polygon(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(classify_rank(p));
}
BENCHMARK(BM_ClassifyRank)->DenseRange(4, 12, 4);

void BM_SolveCyclic(benchmark::State& state) {
    const std::vector<double> sides(static_cast<std::size_t>(state.range(0)), 1.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_cyclic(sides));
}
BENCHMARK(BM_SolveCyclic)->DenseRange(4, 12, 4);

void BM_GammaJacobianRank(benchmark::State& state) {
    const StarPolygon p = solve_cyclic(std::vector<double>(
                              static_cast<std::size_t>(state.range(0)), 1.0))
                              .polygon;
    for (auto _ : state)
        benchmark::DoNotOptimize(numerical_rank(gamma_jacobian(p), 1e-7));
}
BENCHMARK(BM_GammaJacobianRank)->DenseRange(4, 12, 4);

void BM_TraceLeafTriangle(benchmark::State& state) {
    const StarPolygon start = star_polygon({11, 6, 11});
    for (auto _ : state)
        benchmark::DoNotOptimize(trace_leaf(start, 0.05, 200));
}
BENCHMARK(BM_TraceLeafTriangle);

void BM_MaximizeFixedPerimeter(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(
            maximize_area_fixed_perimeter(n, static_cast<double>(n)));
}
BENCHMARK(BM_MaximizeFixedPerimeter)->DenseRange(4, 8, 2);

} // namespace

BENCHMARK_MAIN();
