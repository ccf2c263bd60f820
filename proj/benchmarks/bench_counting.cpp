#include <benchmark/benchmark.h>

#include "axkatz/counting.hpp"

using namespace axkatz;

namespace {

PolynomialSystem cubic_surface() {
    return PolynomialSystem(3, {parse_poly("x0^3 + x1^3 + x2^3 + x3^3", 4)});
}

void BM_CountCubicSurface(benchmark::State& state) {
    auto field = build_field(2, static_cast<unsigned>(state.range(0)));
    PolynomialSystem sys = cubic_surface();
    CountOptions options;
    options.workers = static_cast<unsigned>(state.range(1));
    options.budget = 1ull << 40;
    for (auto _ : state) {
        benchmark::DoNotOptimize(count_points(sys, field, options));
    }
    state.SetItemsProcessed(state.iterations() *
                            projective_space_size(3, field->q()).get_ui());
}

BENCHMARK(BM_CountCubicSurface)
    ->Args({5, 1})
    ->Args({6, 1})
    ->Args({7, 1})
    ->Args({7, 4})
    ->Unit(benchmark::kMillisecond);

void BM_ConeOracleQuadric(benchmark::State& state) {
    auto field = build_field(3, static_cast<unsigned>(state.range(0)));
    PolynomialSystem sys(3, {parse_poly("x0*x3 - x1*x2", 4)});
    for (auto _ : state) {
        benchmark::DoNotOptimize(cone_count_oracle(sys, field));
    }
}

BENCHMARK(BM_ConeOracleQuadric)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
