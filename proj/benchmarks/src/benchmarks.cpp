#include <benchmark/benchmark.h>

#include <genmat/builtins.hpp>
#include <genmat/central.hpp>
#include <genmat/evaluate.hpp>
#include <genmat/invariants.hpp>
#include <genmat/linalg.hpp>
#include <genmat/nullstellensatz.hpp>
#include <genmat/parser.hpp>
#include <genmat/rng.hpp>

namespace {

using namespace genmat;

MatrixTuple sample_tuple(std::uint64_t seed, int m, int n) {
    Rng rng(seed);
    return random_generating_tuple(rng, m, n, -5, 5);
}

void BM_evaluate_friedland_expr(benchmark::State& state) {
    const TracePolynomial p = builtin("friedland_c");
    const MatrixTuple a = sample_tuple(1, 2, 2);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(p, a));
}
BENCHMARK(BM_evaluate_friedland_expr);

void BM_evaluate_formanek3(benchmark::State& state) {
    const TracePolynomial p = builtin("formanek(3)");
    const MatrixTuple a = sample_tuple(2, 4, 3);
    for (auto _ : state) benchmark::DoNotOptimize(evaluate(p, a));
}
BENCHMARK(BM_evaluate_formanek3);

void BM_generates(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MatrixTuple a = sample_tuple(3, 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(generates(a));
}
BENCHMARK(BM_generates)->Arg(2)->Arg(3)->Arg(4);

void BM_rref(benchmark::State& state) {
    const int dim = static_cast<int>(state.range(0));
    Rng rng(4);
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(dim));
    for (auto& row : rows) {
        row.reserve(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) row.emplace_back(rng.uniform(-9, 9));
    }
    for (auto _ : state) benchmark::DoNotOptimize(rref(rows));
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_fingerprint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MatrixTuple a = sample_tuple(5, 2, n);
    for (auto _ : state) benchmark::DoNotOptimize(fingerprint(a, n * n));
}
BENCHMARK(BM_fingerprint)->Arg(2)->Arg(3);

void BM_conjugate_test(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const MatrixTuple a = sample_tuple(6, 2, n);
    Rng rng(7);
    const MatrixTuple b = conjugated(a, rng.unimodular(n, 8, 3));
    for (auto _ : state) benchmark::DoNotOptimize(conjugate_test(a, b));
}
BENCHMARK(BM_conjugate_test)->Arg(2)->Arg(3)->Arg(4);

void BM_is_pi_std4_n2(benchmark::State& state) {
    const TracePolynomial p = standard_identity(4);
    for (auto _ : state) benchmark::DoNotOptimize(is_pi(p, 2));
}
BENCHMARK(BM_is_pi_std4_n2);

void BM_ideal_of_points(benchmark::State& state) {
    const std::vector<MatrixTuple> points = {sample_tuple(8, 2, 2),
                                             sample_tuple(9, 2, 2)};
    for (auto _ : state) benchmark::DoNotOptimize(ideal_of_points(points, 2, 2));
}
BENCHMARK(BM_ideal_of_points);

}  // namespace

BENCHMARK_MAIN();
