#include <benchmark/benchmark.h>

#include "pie/generating_functions.hpp"
#include "pie/identities.hpp"
#include "pie/involution.hpp"
#include "pie/partition.hpp"

using namespace pie;

static void BM_EnumeratePartitions(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for (const auto& p : enumerate_partitions(n))
            count += p.size();
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePartitions)->Arg(20)->Arg(40)->Arg(60);

static void BM_EnumerateDistinct(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for (const auto& p : enumerate_distinct(n))
            count += p.size();
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumerateDistinct)->Arg(60)->Arg(120);

static void BM_SeriesMultiplyRational(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    auto a = pochhammer_infinite(mpq_class(2, 3), order);
    auto b = series_inverse(pochhammer_infinite(mpq_class(1), order));
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiplyRational)->Arg(30)->Arg(50);

static void BM_SeriesMultiplySymbolic(benchmark::State& state)
{
    const int order = static_cast<int>(state.range(0));
    auto a = pochhammer_infinite(CPolynomial::c(), order);
    auto b = pochhammer_infinite(CPolynomial(1), order);
    for (auto _ : state)
        benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_SeriesMultiplySymbolic)->Arg(20)->Arg(30);

static void BM_DivisorIdentityExact(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(lhs_rhs_thm21(n, ExactWeight{3}));
}
BENCHMARK(BM_DivisorIdentityExact)->Arg(30)->Arg(60);

static void BM_PairingSweep(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state)
        for (int modulus = 1; modulus <= n; ++modulus)
            benchmark::DoNotOptimize(audit_pairing(n, modulus));
}
BENCHMARK(BM_PairingSweep)->Arg(30)->Arg(60);

static void BM_TwoSizeCountTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(exact_part_size_table(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_TwoSizeCountTable)->Arg(200);
BENCHMARK_MAIN();
