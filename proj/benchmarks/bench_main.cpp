#include <benchmark/benchmark.h>

#include <random>

#include "lslink/cell_complex.hpp"
#include "lslink/invariants.hpp"
#include "lslink/surgery.hpp"

using namespace lslink;

namespace {

LinkHFunction2 whitehead() {
    return h_from_alexander_link(tilde_normalize(families::whitehead_alexander()),
                                 KnotHFunction::unknot(), KnotHFunction::unknot());
}

void BM_HTableFromAlexander(benchmark::State& state) {
    LaurentPoly2 tilde = tilde_normalize(families::whitehead_alexander());
    for (auto _ : state) {
        LinkHFunction2 l =
            h_from_alexander_link(tilde, KnotHFunction::unknot(), KnotHFunction::unknot());
        benchmark::DoNotOptimize(l.h(0, 0));
    }
}
BENCHMARK(BM_HTableFromAlexander);

void BM_KnotHFromAlexander(benchmark::State& state) {
    int p = static_cast<int>(state.range(0));
    LaurentPoly1 alex = torus_knot_alexander(p, p + 1);
    for (auto _ : state) {
        KnotHFunction k = h_from_alexander_knot(alex);
        benchmark::DoNotOptimize(k.at(0));
    }
}
BENCHMARK(BM_KnotHFromAlexander)->Arg(2)->Arg(5)->Arg(10);

void BM_BuildComplexAndRelativeD(benchmark::State& state) {
    LinkHFunction2 wh = whitehead();
    int p = static_cast<int>(state.range(0));
    SpincLabel2 label = all_spinc_labels(p, -p).front();
    int b = default_truncation(wh, p, -p);
    for (auto _ : state) {
        TruncatedComplex cx = build_complex(wh, p, -p, label, b);
        benchmark::DoNotOptimize(relative_d(cx));
    }
}
BENCHMARK(BM_BuildComplexAndRelativeD)->Arg(1)->Arg(3);

void BM_OracleSweep(benchmark::State& state) {
    LinkHFunction2 wh = whitehead();
    for (auto _ : state) {
        OracleCheckReport rep = check_against_formula(wh, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(rep.cases);
    }
}
BENCHMARK(BM_OracleSweep)->Arg(2)->Arg(3);

void BM_MaximinBottleneck(benchmark::State& state) {
    std::mt19937 rng(12345);
    int n = static_cast<int>(state.range(0));
    std::uniform_int_distribution<int> w(0, 100);
    std::vector<std::vector<std::int64_t>> grid(n, std::vector<std::int64_t>(n));
    for (auto& row : grid)
        for (auto& v : row) v = w(rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(maximin_bottleneck(grid, PathSides::LeftRight));
}
BENCHMARK(BM_MaximinBottleneck)->Arg(8)->Arg(40);

void BM_DInvariantBatch(benchmark::State& state) {
    LinkHFunction2 wh = whitehead();
    for (auto _ : state) {
        Rational acc(0);
        for (const SpincLabel2& label : all_spinc_labels(5, 4))
            acc = acc + d_link_surgery(wh, 5, 4, label);
        benchmark::DoNotOptimize(acc);
    }
}
BENCHMARK(BM_DInvariantBatch);

void BM_GenusBound(benchmark::State& state) {
    LinkHFunction2 wh = whitehead();
    for (auto _ : state) {
        GenusBoundReport rep = genus_lower_bound(wh, 3);
        benchmark::DoNotOptimize(rep.min_total);
    }
}
BENCHMARK(BM_GenusBound);

}  // namespace

BENCHMARK_MAIN();
