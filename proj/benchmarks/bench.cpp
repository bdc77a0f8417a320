#include <benchmark/benchmark.h>

#include <random>

#include "zariski/bounds.hpp"
#include "zariski/gallery.hpp"
#include "zariski/linalg.hpp"
#include "zariski/zariski.hpp"

using namespace zariski;

namespace {

IntMatrix random_symmetric(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<long> dist(-9, 9);
    IntMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = dist(rng);
        for (std::size_t j = i + 1; j < dim; ++j) {
            m.at(i, j) = dist(rng);
            m.at(j, i) = m.at(i, j);
        }
    }
    return m;
}

DivisorClass demo_plus_curves(const SurfaceModel& x) {
    DivisorClass d = x.ample;
    for (const auto& c : x.curves) d = d + c.cls;
    return d;
}

void BM_Det(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const auto m = random_symmetric(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(linalg::det(m));
}
BENCHMARK(BM_Det)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

void BM_Solve(benchmark::State& state) {
    std::mt19937_64 rng(43);
    const auto n = static_cast<std::size_t>(state.range(0));
    IntMatrix s;
    do {
        s = random_symmetric(n, rng);
    } while (linalg::det(s) == 0);
    IntVector b(n);
    std::uniform_int_distribution<long> dist(-9, 9);
    for (auto& v : b) v = dist(rng);
    for (auto _ : state) benchmark::DoNotOptimize(linalg::solve(s, b));
}
BENCHMARK(BM_Solve)->Arg(4)->Arg(8)->Arg(16);

void BM_Signature(benchmark::State& state) {
    std::mt19937_64 rng(44);
    const auto m = random_symmetric(static_cast<std::size_t>(state.range(0)), rng);
    for (auto _ : state) benchmark::DoNotOptimize(linalg::signature(m));
}
BENCHMARK(BM_Signature)->Arg(8)->Arg(16);

void BM_DecomposeCollinear(benchmark::State& state) {
    const auto x = gallery::build_collinear(state.range(0));
    const auto d = demo_plus_curves(x);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(x, d));
}
BENCHMARK(BM_DecomposeCollinear)->Arg(5)->Arg(10)->Arg(20);

void BM_DecomposeDelPezzo(benchmark::State& state) {
    const auto x = gallery::build_del_pezzo(state.range(0));
    const auto d = demo_plus_curves(x);
    for (auto _ : state) benchmark::DoNotOptimize(decompose(x, d));
}
BENCHMARK(BM_DecomposeDelPezzo)->Arg(3)->Arg(6)->Arg(8);

void BM_OracleContext(benchmark::State& state) {
    const auto x = gallery::build_two_lines(4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(make_oracle_context(x));
}
BENCHMARK(BM_OracleContext);

void BM_DecomposeOracle(benchmark::State& state) {
    const auto x = gallery::build_two_lines(4, 5);
    const auto ctx = make_oracle_context(x);
    const auto d = demo_plus_curves(x);
    for (auto _ : state) benchmark::DoNotOptimize(decompose_oracle(ctx, d));
}
BENCHMARK(BM_DecomposeOracle);

void BM_EnumerateDenominatorBound(benchmark::State& state) {
    const auto x = gallery::build_two_lines(4, 5);
    for (auto _ : state) benchmark::DoNotOptimize(bounds::enumerate_denominator_bound(x));
}
BENCHMARK(BM_EnumerateDenominatorBound);

void BM_MinusOneClasses(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(gallery::minus_one_classes(state.range(0)));
}
BENCHMARK(BM_MinusOneClasses)->Arg(6)->Arg(8);

}  // namespace

BENCHMARK_MAIN();
