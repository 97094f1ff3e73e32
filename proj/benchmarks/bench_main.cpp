#include <benchmark/benchmark.h>

#include <random>

#include "lgint/class_parser.hpp"
#include "lgint/geometry.hpp"
#include "lgint/integrate.hpp"
#include "lgint/polyring.hpp"
#include "lgint/symclasses.hpp"

using namespace lgint;

static void BM_CoefficientRoute(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const SparsePoly p = to_chern_roots(pow(ClassExpr::generator(1, n), lg_dimension(n)));
    c_coeff(p, n);  // warm the kernel cache
    for (auto _ : state) benchmark::DoNotOptimize(c_coeff(p, n));
}
BENCHMARK(BM_CoefficientRoute)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_LocalizationRoute(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const ClassExpr c = pow(ClassExpr::generator(1, n), lg_dimension(n));
    std::vector<Rational> lambdas;
    for (unsigned i = 1; i <= n; ++i) lambdas.emplace_back(i);
    for (auto _ : state) benchmark::DoNotOptimize(localization_lg(c, lambdas, n));
}
BENCHMARK(BM_LocalizationRoute)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_KernelProduct(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    auto factors = discriminant_factors(n);
    auto plus = plusprod_factors(n);
    factors.insert(factors.end(), plus.begin(), plus.end());
    for (auto _ : state) benchmark::DoNotOptimize(product_pruned(factors, static_cast<unsigned>(2 * n - 1)));
}
BENCHMARK(BM_KernelProduct)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_MulPruned(benchmark::State& state) {
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<unsigned> ed(0, 6);
    std::uniform_int_distribution<int> cd(-9, 9);
    auto random_poly = [&] {
        SparsePoly p(4);
        for (int t = 0; t < 200; ++t) p.add_term({ed(rng), ed(rng), ed(rng), ed(rng)}, Rational(cd(rng)));
        return p;
    };
    const SparsePoly a = random_poly(), b = random_poly();
    for (auto _ : state) benchmark::DoNotOptimize(mul_pruned(a, b, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_MulPruned)->Arg(4)->Arg(7)->Arg(12);

static void BM_Qtilde(benchmark::State& state) {
    const unsigned n = static_cast<unsigned>(state.range(0));
    const StrictPartition top = full_staircase(n);
    for (auto _ : state) benchmark::DoNotOptimize(qtilde(top, n));
}
BENCHMARK(BM_Qtilde)->DenseRange(3, 7);

static void BM_QuantumProduct(benchmark::State& state) {
    const StrictPartition a({3, 2}), b({2, 1});
    for (auto _ : state) benchmark::DoNotOptimize(quantum_product(a, b, 4));
}
BENCHMARK(BM_QuantumProduct)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
