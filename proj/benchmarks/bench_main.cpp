#include <benchmark/benchmark.h>

#include "dkmax/divisor.hpp"
#include "dkmax/maximizer.hpp"
#include "dkmax/shcn.hpp"
#include "dkmax/verify.hpp"

namespace {

const dkmax::PrimeTable& table() {
    static const dkmax::PrimeTable t(2'000'000);
    return t;
}

void BM_PrimeSieve(benchmark::State& state) {
    for (auto _ : state) {
        dkmax::PrimeTable t(static_cast<std::uint64_t>(state.range(0)));
        benchmark::DoNotOptimize(t.primes().size());
    }
}
BENCHMARK(BM_PrimeSieve)->Arg(100'000)->Arg(2'000'000)->Unit(benchmark::kMillisecond);

void BM_FindLambda(benchmark::State& state) {
    const auto k = static_cast<std::uint64_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dkmax::find_lambda(k, table()).lambda);
}
BENCHMARK(BM_FindLambda)->Arg(2)->Arg(100)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_NTilde(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(dkmax::n_tilde(500, 3.0, table()).log_value());
}
BENCHMARK(BM_NTilde);

void BM_LogDk(benchmark::State& state) {
    const auto n = dkmax::n_tilde(2000, 4.0, table());
    for (auto _ : state) benchmark::DoNotOptimize(dkmax::log_d_k(n, 2000));
}
BENCHMARK(BM_LogDk);

void BM_BruteForceScan(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(dkmax::brute_force_max_f(3, static_cast<std::uint64_t>(state.range(0)), table()).argmax);
}
BENCHMARK(BM_BruteForceScan)->Arg(100'000)->Arg(1'000'000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
