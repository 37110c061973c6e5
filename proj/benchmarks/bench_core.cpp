#include <benchmark/benchmark.h>

#include "smallarr/chordal.hpp"
#include "smallarr/fixtures.hpp"
#include "smallarr/forest.hpp"
#include "smallarr/generate.hpp"
#include "smallarr/ideals.hpp"
#include "smallarr/io.hpp"
#include "smallarr/rng.hpp"

using namespace smallarr;

namespace {

Matrix random_square(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.rational(20);
    return m;
}

void BM_rref(benchmark::State& state) {
    const auto m = random_square(static_cast<std::size_t>(state.range(0)), 99);
    for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(12);

void BM_row_space_intersect(benchmark::State& state) {
    Rng rng(7);
    const std::size_t n = 8;
    Matrix a(3, n), b(3, n);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            a.at(r, c) = Rational(rng.int_in(-5, 5));
            b.at(r, c) = Rational(rng.int_in(-5, 5));
        }
    for (auto _ : state) benchmark::DoNotOptimize(row_space_intersect(a, b));
}
BENCHMARK(BM_row_space_intersect);

void BM_is_small(benchmark::State& state) {
    const auto arr =
        random_small_arrangement(static_cast<int>(state.range(0)), 8, 2024);
    for (auto _ : state) benchmark::DoNotOptimize(is_small(arr));
}
BENCHMARK(BM_is_small)->Arg(3)->Arg(5)->Arg(7);

void BM_equations(benchmark::State& state) {
    const auto arr = random_small_arrangement(4, 6, 11);
    const auto order = is_small(arr).ordering->sequence;
    for (auto _ : state)
        benchmark::DoNotOptimize(equations_for_ordered_arrangement(arr, order));
}
BENCHMARK(BM_equations);

void BM_degree_piece3(benchmark::State& state) {
    const auto arr = load_arrangement(fixtures::text("example05"));
    for (auto _ : state) benchmark::DoNotOptimize(degree_piece(arr, 3));
}
BENCHMARK(BM_degree_piece3);

void BM_froberg_check(benchmark::State& state) {
    const auto g = graph_from_mask(6, 0x3f1a);
    for (auto _ : state) benchmark::DoNotOptimize(froberg_check(g));
}
BENCHMARK(BM_froberg_check);

void BM_froberg_sweep_n4(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(froberg_sweep(4, false, 1));
}
BENCHMARK(BM_froberg_sweep_n4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
