// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "fq/fermatq.hpp"
#include "fq/ihara.hpp"
#include "fq/primes.hpp"
#include "fq/reference.hpp"

namespace {

void BM_ModexpMontgomery(benchmark::State &state)
{
    const fq::PrimeContext ctx(4294967291ULL);
    std::uint64_t base = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fq::modexp_p2(ctx, base, ctx.p() - 1));
        ++base;
    }
}
BENCHMARK(BM_ModexpMontgomery);

void BM_ModexpReference(benchmark::State &state)
{
    const std::uint64_t p = 4294967291ULL;
    std::uint64_t base = 2;
    for (auto _ : state) {
        benchmark::DoNotOptimize(fq::reference::modexp_p2(p, base, p - 1));
        ++base;
    }
}
BENCHMARK(BM_ModexpReference);

void BM_SieveSegmented(benchmark::State &state)
{
    for (auto _ : state) benchmark::DoNotOptimize(fq::primes_up_to(static_cast<std::uint64_t>(state.range(0))));
}
BENCHMARK(BM_SieveSegmented)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void BM_SieveReference(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(fq::reference::primes_up_to(static_cast<std::uint64_t>(state.range(0))));
    }
}
BENCHMARK(BM_SieveReference)->Arg(1 << 20)->Arg(1 << 24)->Unit(benchmark::kMillisecond);

void BM_EnumerateQ(benchmark::State &state)
{
    const fq::PrimeContext ctx(1000003);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fq::enumerate_Q(ctx, n));
}
BENCHMARK(BM_EnumerateQ)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_EnumerateQBrute(benchmark::State &state)
{
    const fq::PrimeContext ctx(1000003);
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fq::enumerate_Q(ctx, n, {}, true));
}
BENCHMARK(BM_EnumerateQBrute)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_EnumerateQReference(benchmark::State &state)
{
    const auto n = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(fq::reference::enumerate_Q(1000003, n));
}
BENCHMARK(BM_EnumerateQReference)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_CountT(benchmark::State &state)
{
    const fq::PrimeContext ctx(2003);
    for (auto _ : state) benchmark::DoNotOptimize(fq::count_T(ctx, ctx.p_squared()));
}
BENCHMARK(BM_CountT)->Unit(benchmark::kMillisecond);

void BM_CountTBrute(benchmark::State &state)
{
    const fq::PrimeContext ctx(2003);
    for (auto _ : state) benchmark::DoNotOptimize(fq::count_T_brute(ctx, ctx.p_squared()));
}
BENCHMARK(BM_CountTBrute)->Unit(benchmark::kMillisecond);

void BM_CountTReference(benchmark::State &state)
{
    for (auto _ : state) benchmark::DoNotOptimize(fq::reference::count_T(2003, 2003ULL * 2003ULL));
}
BENCHMARK(BM_CountTReference)->Unit(benchmark::kMillisecond);

void BM_IharaFull(benchmark::State &state)
{
    const fq::PrimeContext ctx(static_cast<std::uint64_t>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(fq::ihara_full(ctx));
}
BENCHMARK(BM_IharaFull)->Arg(10007)->Arg(1000003)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
