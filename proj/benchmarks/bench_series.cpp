#include <benchmark/benchmark.h>

#include "oddzeta/bernoulli.hpp"
#include "oddzeta/identities.hpp"
#include "oddzeta/series.hpp"

namespace {

using oddzeta::series::Real;

void BM_FastOddZeta3(benchmark::State& state) {
    const long prec = state.range(0);
    for (auto _ : state) {
        Real z = oddzeta::identities::fast_odd_zeta(0, prec);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_FastOddZeta3)->Arg(256)->Arg(512)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_ZetaEulerMaclaurin3(benchmark::State& state) {
    const long prec = state.range(0);
    for (auto _ : state) {
        Real z = oddzeta::series::zeta_integer(3, prec);
        benchmark::DoNotOptimize(z);
    }
}
BENCHMARK(BM_ZetaEulerMaclaurin3)
    ->Arg(256)
    ->Arg(512)
    ->Arg(1024)
    ->Arg(2048)
    ->Unit(benchmark::kMillisecond);

void BM_LambertSum(benchmark::State& state) {
    const long prec = state.range(0);
    Real a = oddzeta::series::pi(prec + oddzeta::series::kGuardBits);
    for (auto _ : state) {
        auto r = oddzeta::series::lambert_sum(3, a, prec);
        benchmark::DoNotOptimize(r.value);
    }
}
BENCHMARK(BM_LambertSum)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_VerifyRamanujan(benchmark::State& state) {
    oddzeta::identities::IdentityParams p{static_cast<unsigned long>(state.range(0)),
                                          oddzeta::exact::Rational(2), 256};
    for (auto _ : state) {
        auto r = oddzeta::identities::verify_ramanujan(p);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_VerifyRamanujan)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BernoulliFreshCache(benchmark::State& state) {
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        oddzeta::exact::BernoulliCache cache;
        benchmark::DoNotOptimize(cache.get(n));
    }
}
BENCHMARK(BM_BernoulliFreshCache)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_DoubleSum(benchmark::State& state) {
    Real one = Real::of(1ul, 128);
    const unsigned long n = static_cast<unsigned long>(state.range(0));
    for (auto _ : state) {
        Real s = oddzeta::series::double_sum_truncated(one, 6, 0, n);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_DoubleSum)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
