#include <benchmark/benchmark.h>

#include "axkatz/field.hpp"

using namespace axkatz;

namespace {

void BM_MulTable(benchmark::State& state) {
    auto field = build_field(2, 7, true);
    const std::uint64_t q = field->q();
    std::uint64_t a = 3, b = 5;
    for (auto _ : state) {
        a = field->mul_index(a, b) | 1;
        b = (b + 1) % q | 1;
        benchmark::DoNotOptimize(a);
    }
}

void BM_MulGeneric(benchmark::State& state) {
    auto field = build_field(2, 7, false);
    const std::uint64_t q = field->q();
    std::uint64_t a = 3, b = 5;
    for (auto _ : state) {
        a = field->mul_index(a, b) | 1;
        b = (b + 1) % q | 1;
        benchmark::DoNotOptimize(a);
    }
}

BENCHMARK(BM_MulTable);
BENCHMARK(BM_MulGeneric);

void BM_BuildField(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_field(2, static_cast<unsigned>(state.range(0))));
    }
}

BENCHMARK(BM_BuildField)->Arg(7)->Arg(10)->Arg(14);

} // namespace

BENCHMARK_MAIN();
