#include <benchmark/benchmark.h>

#include <chambar/scalar.hpp>

using namespace chambar;

static void BM_exact_multiply(benchmark::State& state) {
    const auto m = static_cast<unsigned long>(state.range(0));
    Scalar a = Scalar::root_of_unity(m) + Scalar::from_rational(Rational(3, 7));
    Scalar b = Scalar::root_of_unity_power(m, m / 2 + 1) - Scalar::from_rational(Rational(2, 5));
    for (auto _ : state) {
        Scalar c = a * b;
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_exact_multiply)->Arg(3)->Arg(12)->Arg(36);

static void BM_exact_inverse(benchmark::State& state) {
    const auto m = static_cast<unsigned long>(state.range(0));
    Scalar a = Scalar::root_of_unity(m) + Scalar::from_int(2);
    for (auto _ : state) {
        Scalar c = a.inverse();
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_exact_inverse)->Arg(3)->Arg(12)->Arg(36);

BENCHMARK_MAIN();
