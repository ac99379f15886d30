#include <benchmark/benchmark.h>

#include "thetad/bigfloat.hpp"
#include "thetad/ode.hpp"
#include "thetad/oracles.hpp"
#include "thetad/sequences.hpp"
#include "thetad/series.hpp"
#include "thetad/theta.hpp"

namespace {

using namespace thetad;

void BM_ComputeD(benchmark::State& state) {
    const int n = (int)state.range(0);
    for (auto _ : state) {
        DTable t = compute_d(n);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_ComputeD)->Arg(25)->Arg(50)->Arg(100)->Arg(200)
    ->Unit(benchmark::kMillisecond);

void BM_SeriesMultiply(benchmark::State& state) {
    const int order = (int)state.range(0);
    const Series F1 = hypergeometric_series(make_rat(1, 4), make_rat(1, 4),
                                            make_rat(1, 2), Rat(4), order);
    for (auto _ : state) {
        Series sq = F1 * F1;
        benchmark::DoNotOptimize(sq);
    }
}
BENCHMARK(BM_SeriesMultiply)->Arg(32)->Arg(64)->Arg(128);

void BM_SeriesDivide(benchmark::State& state) {
    const int order = (int)state.range(0);
    const Series F1 = hypergeometric_series(make_rat(1, 4), make_rat(1, 4),
                                            make_rat(1, 2), Rat(4), order);
    const Series F2 = hypergeometric_series(make_rat(3, 4), make_rat(3, 4),
                                            make_rat(3, 2), Rat(4), order);
    for (auto _ : state) {
        Series q = F2 / F1;
        benchmark::DoNotOptimize(q);
    }
}
BENCHMARK(BM_SeriesDivide)->Arg(32)->Arg(64)->Arg(128);

void BM_Theta3(benchmark::State& state) {
    const mpfr_prec_t prec = (mpfr_prec_t)state.range(0);
    const BigFloat one = BigFloat::of(1L, prec);
    for (auto _ : state) {
        BigFloat t = theta3(one, prec);
        benchmark::DoNotOptimize(t);
    }
}
BENCHMARK(BM_Theta3)->Arg(256)->Arg(1024)->Arg(4096);

void BM_HermiteOracle(benchmark::State& state) {
    const int j = (int)state.range(0);
    const DTable t = compute_d(j);
    for (auto _ : state) {
        OracleVerdict v = hermite_oracle_d(j, t, 512);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_HermiteOracle)->Arg(4)->Arg(8)->Arg(12);

void BM_SigmaHatOdeResidual(benchmark::State& state) {
    const int M = (int)state.range(0);
    const DTable t = compute_d(M / 2);
    for (auto _ : state) {
        OdeResidual r = sigma_hat_ode_residual(t, M);
        benchmark::DoNotOptimize(r);
    }
}
BENCHMARK(BM_SigmaHatOdeResidual)->Arg(30)->Arg(60)
    ->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
